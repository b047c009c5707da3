#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pagesim/geometry.hpp"

namespace pagesim {

enum class Op : uint8_t { Read, Write };

/// One line of a trace file: `<gap> <R|W> <hex-addr>`.
/// gap counts non-memory cycles since the previous record.
struct TraceRecord {
  uint64_t gap = 0;
  Op op = Op::Read;
  uint64_t addr = 0;

  bool operator==(const TraceRecord&) const = default;
};

struct MemoryRequest {
  uint64_t arrival = 0;
  Op op = Op::Read;
  uint64_t addr = 0;
  uint32_t source = 0;  // workload tag within a mix
};

/// A named, arrival-resolved request stream ready to simulate.
struct Trace {
  std::string name;
  std::vector<MemoryRequest> requests;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

/// Parses the trace grammar. Lines starting with `#` and blank lines are
/// skipped. Addresses at or beyond geometry capacity are rejected with the
/// offending line number.
std::vector<TraceRecord> parse_trace(std::istream& in,
                                     const DramGeometry& geo);
std::vector<TraceRecord> parse_trace_file(const std::string& path,
                                          const DramGeometry& geo);

void serialize_trace(const std::vector<TraceRecord>& records,
                     std::ostream& out);
void serialize_trace_file(const std::vector<TraceRecord>& records,
                          const std::string& path);

/// Arrival cycles are prefix sums of gaps plus a 1-cycle issue cost per
/// record after the first: arrival_0 = gap_0, arrival_i = arrival_{i-1}
/// + 1 + gap_i. Arrivals therefore strictly increase within one trace.
std::vector<MemoryRequest> to_requests(const std::vector<TraceRecord>& records,
                                       uint32_t source = 0);

}  // namespace pagesim
