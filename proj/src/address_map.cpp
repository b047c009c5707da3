#include "pagesim/address_map.hpp"

#include <stdexcept>

namespace pagesim {

const char* to_string(MappingScheme scheme) {
  switch (scheme) {
    case MappingScheme::RowLocality: return "row_locality";
    case MappingScheme::Permutation: return "permutation";
    case MappingScheme::Minimalist: return "minimalist";
  }
  return "?";
}

MappingScheme mapping_from_string(const std::string& name) {
  if (name == "row_locality") return MappingScheme::RowLocality;
  if (name == "permutation") return MappingScheme::Permutation;
  if (name == "minimalist") return MappingScheme::Minimalist;
  throw ConfigError("unknown mapping scheme '" + name +
                    "' (expected row_locality|permutation|minimalist)");
}

namespace {

struct BitCursor {
  uint64_t value;
  uint32_t take(unsigned bits) {
    uint32_t field = uint32_t(value & ((uint64_t(1) << bits) - 1));
    value >>= bits;
    return field;
  }
};

struct BitBuilder {
  uint64_t value = 0;
  unsigned shift = 0;
  void put(uint64_t field, unsigned bits) {
    value |= field << shift;
    shift += bits;
  }
};

uint32_t low_row_bits(uint32_t row, const DramGeometry& geo) {
  return row & (geo.banks - 1);
}

}  // namespace

DecodedAddress decode(uint64_t addr, const DramGeometry& geo,
                      MappingScheme scheme) {
  geo.validate();
  if (addr >= geo.capacity_bytes())
    throw std::out_of_range("address 0x" + std::to_string(addr) +
                            " is outside geometry capacity");

  BitCursor cur{addr};
  DecodedAddress dec;
  cur.take(geo.offset_bits());
  switch (scheme) {
    case MappingScheme::RowLocality:
    case MappingScheme::Permutation:
      dec.channel = cur.take(geo.channel_bits());
      dec.column = cur.take(geo.column_bits());
      dec.bank = cur.take(geo.bank_bits());
      dec.rank = cur.take(geo.rank_bits());
      dec.row = cur.take(geo.row_bits());
      if (scheme == MappingScheme::Permutation)
        dec.bank ^= low_row_bits(dec.row, geo);
      break;
    case MappingScheme::Minimalist:
      dec.bank = cur.take(geo.bank_bits());
      dec.rank = cur.take(geo.rank_bits());
      dec.channel = cur.take(geo.channel_bits());
      dec.column = cur.take(geo.column_bits());
      dec.row = cur.take(geo.row_bits());
      dec.bank ^= low_row_bits(dec.row, geo);
      break;
  }
  return dec;
}

uint64_t encode(const DecodedAddress& dec, const DramGeometry& geo,
                MappingScheme scheme) {
  geo.validate();
  BitBuilder out;
  out.put(0, geo.offset_bits());
  // The XOR is an involution given the row, so the stored bank field is
  // recovered by applying it again.
  uint32_t bank_field = dec.bank;
  if (scheme != MappingScheme::RowLocality)
    bank_field ^= low_row_bits(dec.row, geo);
  switch (scheme) {
    case MappingScheme::RowLocality:
    case MappingScheme::Permutation:
      out.put(dec.channel, geo.channel_bits());
      out.put(dec.column, geo.column_bits());
      out.put(bank_field, geo.bank_bits());
      out.put(dec.rank, geo.rank_bits());
      out.put(dec.row, geo.row_bits());
      break;
    case MappingScheme::Minimalist:
      out.put(bank_field, geo.bank_bits());
      out.put(dec.rank, geo.rank_bits());
      out.put(dec.channel, geo.channel_bits());
      out.put(dec.column, geo.column_bits());
      out.put(dec.row, geo.row_bits());
      break;
  }
  return out.value;
}

std::vector<unsigned> participant_bits(const DramGeometry& geo,
                                       MappingScheme scheme) {
  geo.validate();
  std::vector<unsigned> bits;
  bits.reserve(geo.participant_bit_count());
  auto add_range = [&bits](unsigned from, unsigned count) {
    for (unsigned i = 0; i < count; ++i) bits.push_back(from + i);
  };

  unsigned pos = geo.offset_bits();
  switch (scheme) {
    case MappingScheme::RowLocality:
    case MappingScheme::Permutation:
      // [offset][channel][column][bank][rank][row], LSB -> MSB. The bank
      // XOR reuses row bits that are already participants, so Permutation
      // shares RowLocality's set.
      add_range(pos, geo.channel_bits());
      pos += geo.channel_bits() + geo.column_bits();
      add_range(pos, geo.bank_bits() + geo.rank_bits() + geo.row_bits());
      break;
    case MappingScheme::Minimalist:
      // [offset][bank][rank][channel][column][row], LSB -> MSB.
      add_range(pos, geo.bank_bits() + geo.rank_bits() + geo.channel_bits());
      pos += geo.bank_bits() + geo.rank_bits() + geo.channel_bits() +
             geo.column_bits();
      add_range(pos, geo.row_bits());
      break;
  }
  return bits;
}

}  // namespace pagesim
