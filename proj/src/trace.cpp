#include "pagesim/trace.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace pagesim {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<TraceRecord> parse_trace(std::istream& in,
                                     const DramGeometry& geo) {
  const uint64_t capacity = geo.capacity_bytes();
  std::vector<TraceRecord> records;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    std::istringstream fields{std::string(body)};
    std::string gap_tok, op_tok, addr_tok, extra;
    if (!(fields >> gap_tok >> op_tok >> addr_tok))
      throw ParseError(lineno, "expected '<gap> <R|W> <hex-addr>', got '" +
                                   std::string(body) + "'");
    if (fields >> extra)
      throw ParseError(lineno, "trailing token '" + extra + "'");

    TraceRecord rec;
    auto gap_res = std::from_chars(gap_tok.data(),
                                   gap_tok.data() + gap_tok.size(), rec.gap);
    if (gap_res.ec != std::errc{} ||
        gap_res.ptr != gap_tok.data() + gap_tok.size())
      throw ParseError(lineno, "invalid gap '" + gap_tok + "'");

    if (op_tok == "R")
      rec.op = Op::Read;
    else if (op_tok == "W")
      rec.op = Op::Write;
    else
      throw ParseError(lineno, "invalid op '" + op_tok + "' (expected R or W)");

    std::string_view addr_sv = addr_tok;
    if (addr_sv.size() > 2 && addr_sv[0] == '0' &&
        (addr_sv[1] == 'x' || addr_sv[1] == 'X'))
      addr_sv.remove_prefix(2);
    auto addr_res = std::from_chars(addr_sv.data(),
                                    addr_sv.data() + addr_sv.size(), rec.addr,
                                    16);
    if (addr_res.ec != std::errc{} ||
        addr_res.ptr != addr_sv.data() + addr_sv.size())
      throw ParseError(lineno, "invalid address '" + addr_tok + "'");
    if (rec.addr >= capacity)
      throw ParseError(lineno, "address '" + addr_tok +
                                   "' is outside the configured capacity");

    records.push_back(rec);
  }
  return records;
}

std::vector<TraceRecord> parse_trace_file(const std::string& path,
                                          const DramGeometry& geo) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open trace file '" + path + "'");
  return parse_trace(in, geo);
}

void serialize_trace(const std::vector<TraceRecord>& records,
                     std::ostream& out) {
  char buf[64];
  for (const TraceRecord& rec : records) {
    snprintf(buf, sizeof(buf), "%llu %c 0x%llX\n",
             (unsigned long long)rec.gap, rec.op == Op::Read ? 'R' : 'W',
             (unsigned long long)rec.addr);
    out << buf;
  }
}

void serialize_trace_file(const std::vector<TraceRecord>& records,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write trace file '" + path + "'");
  serialize_trace(records, out);
}

std::vector<MemoryRequest> to_requests(const std::vector<TraceRecord>& records,
                                       uint32_t source) {
  std::vector<MemoryRequest> reqs;
  reqs.reserve(records.size());
  uint64_t arrival = 0;
  bool first = true;
  for (const TraceRecord& rec : records) {
    arrival += rec.gap + (first ? 0 : 1);
    first = false;
    reqs.push_back({arrival, rec.op, rec.addr, source});
  }
  return reqs;
}

}  // namespace pagesim
