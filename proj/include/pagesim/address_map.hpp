#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pagesim/geometry.hpp"

namespace pagesim {

// Address interleaving schemes. Bit layouts, MSB -> LSB:
//
//   RowLocality:  [ row | rank | bank | column | channel | offset ]
//   Permutation:  same slices as RowLocality, with the stored bank field
//                 XORed with the log2(banks) lowest row bits.
//   Minimalist:   [ row | column | channel | rank | bank | offset ], with
//                 the Permutation bank XOR. The column slice sits directly
//                 above the channel bits instead of adjacent to the bank,
//                 so consecutive cachelines interleave across banks first.
//
// These slice positions are a fixed convention of this simulator; every
// scheme is a bijection on cacheline-aligned addresses.
enum class MappingScheme { RowLocality, Permutation, Minimalist };

const char* to_string(MappingScheme scheme);
MappingScheme mapping_from_string(const std::string& name);

struct DecodedAddress {
  uint32_t channel = 0;
  uint32_t rank = 0;
  uint32_t bank = 0;
  uint32_t row = 0;
  uint32_t column = 0;

  bool operator==(const DecodedAddress&) const = default;
};

/// Decodes a cacheline-aligned physical address (sub-line offset bits are
/// carried but ignored by predictors). Throws std::out_of_range when addr
/// is at or beyond geometry capacity.
DecodedAddress decode(uint64_t addr, const DramGeometry& geo,
                      MappingScheme scheme);

/// Inverse of decode; offset bits are zero in the result.
uint64_t encode(const DecodedAddress& dec, const DramGeometry& geo,
                MappingScheme scheme);

/// Physical-address bit positions feeding channel, rank, bank or row under
/// the scheme, in ascending order. Column and offset bits are excluded.
std::vector<unsigned> participant_bits(const DramGeometry& geo,
                                       MappingScheme scheme);

/// Flat bank index in [0, total_banks).
inline uint64_t bank_index(const DecodedAddress& dec, const DramGeometry& geo) {
  return (uint64_t(dec.channel) * geo.ranks + dec.rank) * geo.banks + dec.bank;
}

/// Flat row identity in [0, total_rows); used for footprint accounting.
inline uint64_t row_index(const DecodedAddress& dec, const DramGeometry& geo) {
  return bank_index(dec, geo) * geo.rows + dec.row;
}

}  // namespace pagesim
