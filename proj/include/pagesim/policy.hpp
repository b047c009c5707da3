#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "pagesim/address_map.hpp"
#include "pagesim/geometry.hpp"

namespace pagesim {

enum class AccessClass : uint8_t { Hit, Miss, Empty };

const char* to_string(AccessClass cls);

/// Per-access verdict of a page policy: close the row right after the
/// access, or keep it open for `timeout` cycles (kInfinite = until a
/// conflicting access closes it).
struct PolicyDecision {
  static constexpr uint64_t kInfinite = UINT64_MAX;

  bool close_now = false;
  uint64_t timeout = kInfinite;  // meaningful only when !close_now; > 0

  static PolicyDecision close() { return {true, 0}; }
  static PolicyDecision keep_open(uint64_t t = kInfinite) {
    return {false, t};
  }

  bool operator==(const PolicyDecision&) const = default;
};

/// Bank context captured at classification time, before the access mutated
/// the bank. `now` is the cycle service started.
struct TrainContext {
  AccessClass outcome = AccessClass::Empty;
  uint64_t now = 0;
  std::optional<uint64_t> prev_completion;    // previous access to this bank
  std::optional<uint32_t> last_closed_row;    // as of classification
};

enum class PolicyKind {
  Open,
  Close,
  FixedOpen,
  Hybrid,
  IntelAdaptive,
  HybridHappy,
  IntelHappy,
};

const char* to_string(PolicyKind kind);
PolicyKind policy_kind_from_string(const std::string& name);

enum class HappyRule { Majority, Aggregation };

const char* to_string(HappyRule rule);
HappyRule happy_rule_from_string(const std::string& name);

struct PolicyConfig {
  unsigned hybrid_counter_bits = 2;
  HappyRule happy_rule = HappyRule::Majority;

  // Adaptive-timeout knobs. The defaults are artifact choices, not values
  // taken from any device datasheet; every one is config-overridable.
  uint32_t check_interval = 128;  // bank (or monitor-unit) accesses per check
  uint32_t low_threshold = 6;
  uint32_t high_threshold = 10;
  uint32_t tr_init = 4;   // ticks
  uint32_t tr_max = 16;   // ticks
  uint32_t tr_min = 1;    // ticks, per-bank register floor
  uint32_t tick_cycles = 0;  // 0 -> trc / 4

  uint32_t effective_tick(const DramGeometry& geo) const {
    if (tick_cycles != 0) return tick_cycles;
    uint32_t t = geo.trc / 4;
    return t == 0 ? 1 : t;
  }

  void validate() const;
};

/// Uniform predictor interface. decide() must be called before the access
/// is performed; train() once afterwards with the classified outcome.
/// State is trained online only - no lookahead.
class PagePolicy {
 public:
  virtual ~PagePolicy() = default;

  virtual PolicyKind kind() const = 0;
  virtual PolicyDecision decide(const DecodedAddress& dec, uint64_t addr) = 0;
  virtual void train(const DecodedAddress& dec, uint64_t addr,
                     const TrainContext& ctx) {
    (void)dec;
    (void)addr;
    (void)ctx;
  }
};

std::unique_ptr<PagePolicy> make_policy(PolicyKind kind,
                                        const DramGeometry& geo,
                                        MappingScheme scheme,
                                        const PolicyConfig& cfg);

/// Predictor hardware cost: counter/register count per the per-policy
/// formulas, and bytes with each counter rounded up to whole bytes.
struct StorageCost {
  uint64_t counters = 0;
  uint64_t bytes = 0;
};

StorageCost storage_cost(PolicyKind kind, const DramGeometry& geo,
                         const PolicyConfig& cfg);

}  // namespace pagesim
