#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pagesim/address_map.hpp"
#include "pagesim/geometry.hpp"
#include "pagesim/policy.hpp"
#include "pagesim/trace.hpp"

namespace pagesim {

struct AccessOutcome {
  AccessClass cls = AccessClass::Empty;
  uint64_t service_latency = 0;  // the charged per-class cost
  uint64_t completion = 0;       // absolute cycle
};

/// Per-bank row-buffer state. busy_until never decreases. auto_close_at is
/// present only while a row is open; when it passes, the row counts as
/// closed (the precharge hides in idle time, except that an access landing
/// within trp of the close still waits out the remainder).
struct BankState {
  std::optional<uint32_t> open_row;
  uint64_t busy_until = 0;
  std::optional<uint64_t> auto_close_at;
  std::optional<uint32_t> last_closed_row;
  std::optional<uint64_t> last_close_cycle;
  std::optional<uint64_t> last_activate;
  std::optional<uint64_t> last_access_completion;  // of the open row

  uint64_t auto_close_fires = 0;

  /// Fires a due timeout: records the closed row, frees the row buffer and
  /// raises busy_until so an access within trp of the close waits out the
  /// remaining precharge cycles.
  void fire_due_auto_close(uint64_t now, uint32_t trp) {
    if (!auto_close_at || *auto_close_at > now) return;
    uint64_t closed_at = *auto_close_at;
    last_closed_row = open_row;
    last_close_cycle = closed_at;
    open_row.reset();
    auto_close_at.reset();
    if (busy_until < closed_at + trp) busy_until = closed_at + trp;
    ++auto_close_fires;
  }

  /// Classifies an access at cycle `now`, firing a due timeout first.
  AccessClass classify(uint32_t row, uint64_t now, uint32_t trp) {
    fire_due_auto_close(now, trp);
    if (!open_row) return AccessClass::Empty;
    return *open_row == row ? AccessClass::Hit : AccessClass::Miss;
  }
};

/// Performs one access. `earliest_start` carries the constraints the bank
/// does not know about (request arrival, channel bus, issue cycle).
/// Charges the per-class cost (hit = tcl, empty = trcd + tcl, miss =
/// trp + trcd + tcl); activates honor the trc activate-to-activate floor
/// by delaying the start, which shows up as queueing time rather than in
/// the charged cost. Applies the policy decision after the access.
AccessOutcome access_bank(BankState& bank, uint32_t row,
                          uint64_t earliest_start,
                          const PolicyDecision& decision,
                          const DramGeometry& geo);

enum class SchedulerMode { InOrder, FrFcfs };

const char* to_string(SchedulerMode mode);
SchedulerMode scheduler_from_string(const std::string& name);

struct QueuedRequest {
  MemoryRequest req;
  DecodedAddress dec;
  uint64_t bank = 0;
  uint32_t bypassed = 0;
};

/// Picks the index of the next request to service. InOrder picks the
/// oldest. FrFcfs picks the oldest whose target row is currently open,
/// falling back to the oldest overall; a request bypassed more than
/// starvation_cap times becomes non-bypassable (nothing younger may be
/// picked over it).
size_t schedule_pick(const std::vector<QueuedRequest>& queue,
                     const std::vector<BankState>& banks, SchedulerMode mode,
                     uint32_t starvation_cap);

}  // namespace pagesim
