#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pagesim {

/// Configuration / usage errors surfaced to the CLI with a diagnostic.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_pow2(uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

inline unsigned log2_exact(uint64_t v) {
  unsigned n = 0;
  while (v > 1) {
    v >>= 1;
    ++n;
  }
  return n;
}

/// DRAM topology plus the timing parameters the cost model charges.
/// All structural counts must be powers of two; decoding is bit-sliced.
struct DramGeometry {
  uint32_t channels = 1;       // X
  uint32_t ranks = 1;          // Y, per channel
  uint32_t banks = 8;          // Z, per rank
  uint32_t rows = 65536;       // W, per bank
  uint32_t lines_per_row = 128;
  uint32_t line_bytes = 64;

  uint32_t trcd = 13;  // activate -> column command
  uint32_t tcl = 13;   // column command -> data
  uint32_t trp = 13;   // precharge
  uint32_t trc = 39;   // minimum activate-to-activate gap within a bank
  uint32_t bus_mhz = 800;  // informational only

  void validate() const {
    auto pow2_or_throw = [](uint64_t v, const char* name) {
      if (!is_pow2(v))
        throw ConfigError(std::string("geometry.") + name +
                          " must be a power of two, got " + std::to_string(v));
    };
    pow2_or_throw(channels, "channels");
    pow2_or_throw(ranks, "ranks");
    pow2_or_throw(banks, "banks");
    pow2_or_throw(rows, "rows");
    pow2_or_throw(lines_per_row, "lines_per_row");
    pow2_or_throw(line_bytes, "line_bytes");
    if (trc < trcd + trp)
      throw ConfigError("geometry.trc must be >= trcd + trp (" +
                        std::to_string(trcd + trp) + "), got " +
                        std::to_string(trc));
  }

  uint64_t capacity_bytes() const {
    return uint64_t(channels) * ranks * banks * rows * lines_per_row *
           line_bytes;
  }

  unsigned channel_bits() const { return log2_exact(channels); }
  unsigned rank_bits() const { return log2_exact(ranks); }
  unsigned bank_bits() const { return log2_exact(banks); }
  unsigned row_bits() const { return log2_exact(rows); }
  unsigned column_bits() const { return log2_exact(lines_per_row); }
  unsigned offset_bits() const { return log2_exact(line_bytes); }

  unsigned address_bits() const {
    return channel_bits() + rank_bits() + bank_bits() + row_bits() +
           column_bits() + offset_bits();
  }

  /// Number of participant address bits: the bits feeding channel, rank,
  /// bank or row. Column and byte-offset bits are excluded.
  unsigned participant_bit_count() const {
    return channel_bits() + rank_bits() + bank_bits() + row_bits();
  }

  uint64_t total_banks() const { return uint64_t(channels) * ranks * banks; }
  uint64_t total_rows() const { return total_banks() * rows; }
};

}  // namespace pagesim
