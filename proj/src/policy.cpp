#include "pagesim/policy.hpp"

#include <vector>

#include "pagesim/saturating_counter.hpp"

namespace pagesim {

const char* to_string(AccessClass cls) {
  switch (cls) {
    case AccessClass::Hit: return "hit";
    case AccessClass::Miss: return "miss";
    case AccessClass::Empty: return "empty";
  }
  return "?";
}

const char* to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::Open: return "open";
    case PolicyKind::Close: return "close";
    case PolicyKind::FixedOpen: return "fixed_open";
    case PolicyKind::Hybrid: return "hybrid";
    case PolicyKind::IntelAdaptive: return "intel_adaptive";
    case PolicyKind::HybridHappy: return "hybrid_happy";
    case PolicyKind::IntelHappy: return "intel_happy";
  }
  return "?";
}

PolicyKind policy_kind_from_string(const std::string& name) {
  if (name == "open") return PolicyKind::Open;
  if (name == "close") return PolicyKind::Close;
  if (name == "fixed_open") return PolicyKind::FixedOpen;
  if (name == "hybrid") return PolicyKind::Hybrid;
  if (name == "intel_adaptive") return PolicyKind::IntelAdaptive;
  if (name == "hybrid_happy") return PolicyKind::HybridHappy;
  if (name == "intel_happy") return PolicyKind::IntelHappy;
  throw ConfigError("unknown policy '" + name +
                    "' (expected open|close|fixed_open|hybrid|intel_adaptive|"
                    "hybrid_happy|intel_happy)");
}

const char* to_string(HappyRule rule) {
  return rule == HappyRule::Majority ? "majority" : "aggregation";
}

HappyRule happy_rule_from_string(const std::string& name) {
  if (name == "majority") return HappyRule::Majority;
  if (name == "aggregation") return HappyRule::Aggregation;
  throw ConfigError("unknown happy.decision '" + name +
                    "' (expected majority|aggregation)");
}

void PolicyConfig::validate() const {
  if (hybrid_counter_bits < 1 || hybrid_counter_bits > 8)
    throw ConfigError("policy.hybrid_counter_bits must be in [1,8]");
  if (check_interval == 0)
    throw ConfigError("intel.check_interval must be > 0");
  if (tr_min == 0 || tr_min > tr_max)
    throw ConfigError("intel.tr_min must be in [1, tr_max]");
  if (tr_init < tr_min || tr_init > tr_max)
    throw ConfigError("intel.tr_init must be in [tr_min, tr_max]");
  if (low_threshold >= high_threshold)
    throw ConfigError("intel.low_threshold must be < intel.high_threshold");
}

namespace {

constexpr uint8_t kMistakeCounterMid = 8;  // midpoint of the 4-bit range

uint64_t bytes_per_counter(unsigned width_bits) {
  return (width_bits + 7) / 8;
}

class OpenPolicy final : public PagePolicy {
 public:
  PolicyKind kind() const override { return PolicyKind::Open; }
  PolicyDecision decide(const DecodedAddress&, uint64_t) override {
    return PolicyDecision::keep_open();
  }
};

class ClosePolicy final : public PagePolicy {
 public:
  PolicyKind kind() const override { return PolicyKind::Close; }
  PolicyDecision decide(const DecodedAddress&, uint64_t) override {
    return PolicyDecision::close();
  }
};

class FixedOpenPolicy final : public PagePolicy {
 public:
  explicit FixedOpenPolicy(uint32_t trc) : timeout_(trc) {}
  PolicyKind kind() const override { return PolicyKind::FixedOpen; }
  PolicyDecision decide(const DecodedAddress&, uint64_t) override {
    return PolicyDecision::keep_open(timeout_);
  }

 private:
  uint64_t timeout_;
};

// One saturating counter per DRAM row. Counter value 0/1 predicts open,
// 2/3 predicts close; misses increment, hits decrement, empties are
// neutral.
class HybridPolicy final : public PagePolicy {
 public:
  HybridPolicy(const DramGeometry& geo, const PolicyConfig& cfg)
      : geo_(geo),
        counters_(geo.total_rows(),
                  SaturatingCounter(cfg.hybrid_counter_bits)) {}

  PolicyKind kind() const override { return PolicyKind::Hybrid; }

  PolicyDecision decide(const DecodedAddress& dec, uint64_t) override {
    return counter(dec).msb() ? PolicyDecision::close()
                              : PolicyDecision::keep_open();
  }

  void train(const DecodedAddress& dec, uint64_t,
             const TrainContext& ctx) override {
    if (ctx.outcome == AccessClass::Miss)
      counter(dec).increment();
    else if (ctx.outcome == AccessClass::Hit)
      counter(dec).decrement();
  }

  const SaturatingCounter& counter_for(const DecodedAddress& dec) const {
    return counters_[row_index(dec, geo_)];
  }

 private:
  SaturatingCounter& counter(const DecodedAddress& dec) {
    return counters_[row_index(dec, geo_)];
  }

  DramGeometry geo_;
  std::vector<SaturatingCounter> counters_;
};

// Two encoding counters per participant address bit: one trained on
// accesses where the bit is 1 and one where it is 0. The matching counters
// of the requested address vote (majority of counter msbs) or their values
// are summed against AddrBitsWidth * CounterMax / 2.
class HybridHappyPolicy final : public PagePolicy {
 public:
  HybridHappyPolicy(const DramGeometry& geo, MappingScheme scheme,
                    const PolicyConfig& cfg)
      : bits_(participant_bits(geo, scheme)),
        rule_(cfg.happy_rule),
        zero_(bits_.size(), SaturatingCounter(cfg.hybrid_counter_bits)),
        one_(bits_.size(), SaturatingCounter(cfg.hybrid_counter_bits)) {}

  PolicyKind kind() const override { return PolicyKind::HybridHappy; }

  PolicyDecision decide(const DecodedAddress&, uint64_t addr) override {
    if (bits_.empty()) return PolicyDecision::keep_open();
    if (rule_ == HappyRule::Majority) {
      size_t close_votes = 0;
      for (size_t i = 0; i < bits_.size(); ++i)
        if (matching(addr, i).msb()) ++close_votes;
      // A vote of "1" (counter msb set) means close; ties keep open,
      // matching the open-page bias of zero-initialized counters.
      return 2 * close_votes > bits_.size() ? PolicyDecision::close()
                                            : PolicyDecision::keep_open();
    }
    uint64_t sum = 0;
    for (size_t i = 0; i < bits_.size(); ++i)
      sum += matching(addr, i).value();
    uint64_t counter_max = zero_.empty() ? 0 : zero_.front().max();
    // Close iff sum >= bits * max / 2, kept in integers.
    return 2 * sum >= bits_.size() * counter_max ? PolicyDecision::close()
                                                 : PolicyDecision::keep_open();
  }

  void train(const DecodedAddress&, uint64_t addr,
             const TrainContext& ctx) override {
    if (ctx.outcome == AccessClass::Empty) return;
    for (size_t i = 0; i < bits_.size(); ++i) {
      SaturatingCounter& c = matching(addr, i);
      if (ctx.outcome == AccessClass::Miss)
        c.increment();
      else
        c.decrement();
    }
  }

  const std::vector<unsigned>& positions() const { return bits_; }
  const SaturatingCounter& counter(size_t i, bool bit_value) const {
    return bit_value ? one_[i] : zero_[i];
  }

 private:
  SaturatingCounter& matching(uint64_t addr, size_t i) {
    return (addr >> bits_[i]) & 1 ? one_[i] : zero_[i];
  }

  std::vector<unsigned> bits_;
  HappyRule rule_;
  std::vector<SaturatingCounter> zero_;
  std::vector<SaturatingCounter> one_;
};

// 4-bit mistake counter plus timeout register, checked every
// check_interval accesses. A conflict that left enough idle time to have
// precharged decrements MC; an empty that re-opens the row just closed
// increments it.
struct MonitorUnit {
  SaturatingCounter mc{4, kMistakeCounterMid};
  uint32_t tr = 0;
  uint64_t accesses = 0;

  // tr_floor is tr_min for the per-bank register and 0 for per-bit units.
  void observe(const TrainContext& ctx, uint32_t row, uint32_t trp,
               const PolicyConfig& cfg, uint32_t tr_floor) {
    if (ctx.outcome == AccessClass::Miss && ctx.prev_completion &&
        ctx.now - *ctx.prev_completion >= trp) {
      mc.decrement();
    } else if (ctx.outcome == AccessClass::Empty && ctx.last_closed_row &&
               *ctx.last_closed_row == row) {
      mc.increment();
    }
    if (++accesses % cfg.check_interval == 0) {
      if (mc.value() > cfg.high_threshold) {
        if (tr < cfg.tr_max) ++tr;
      } else if (mc.value() < cfg.low_threshold) {
        if (tr > tr_floor) --tr;
      }
      mc.set(kMistakeCounterMid);
    }
  }
};

class IntelAdaptivePolicy final : public PagePolicy {
 public:
  IntelAdaptivePolicy(const DramGeometry& geo, const PolicyConfig& cfg)
      : geo_(geo), cfg_(cfg), tick_(cfg.effective_tick(geo)),
        units_(geo.total_banks()) {
    for (MonitorUnit& mu : units_) mu.tr = cfg.tr_init;
  }

  PolicyKind kind() const override { return PolicyKind::IntelAdaptive; }

  PolicyDecision decide(const DecodedAddress& dec, uint64_t) override {
    return PolicyDecision::keep_open(
        uint64_t(units_[bank_index(dec, geo_)].tr) * tick_);
  }

  void train(const DecodedAddress& dec, uint64_t,
             const TrainContext& ctx) override {
    units_[bank_index(dec, geo_)].observe(ctx, dec.row, geo_.trp, cfg_,
                                          cfg_.tr_min);
  }

  const MonitorUnit& unit(uint64_t bank) const { return units_[bank]; }

 private:
  DramGeometry geo_;
  PolicyConfig cfg_;
  uint32_t tick_;
  std::vector<MonitorUnit> units_;
};

// Per participant bit, a pair of monitor units selected by the bit value.
// The timeout is the sum of the matching per-bit registers scaled by
// tick / bit-count, so the achievable maximum equals one per-bank register
// at tr_max. Per-bit registers range over [0, tr_max].
class IntelHappyPolicy final : public PagePolicy {
 public:
  IntelHappyPolicy(const DramGeometry& geo, MappingScheme scheme,
                   const PolicyConfig& cfg)
      : bits_(participant_bits(geo, scheme)), geo_(geo), cfg_(cfg),
        tick_(cfg.effective_tick(geo)), zero_(bits_.size()),
        one_(bits_.size()) {
    for (MonitorUnit& mu : zero_) mu.tr = cfg.tr_init;
    for (MonitorUnit& mu : one_) mu.tr = cfg.tr_init;
  }

  PolicyKind kind() const override { return PolicyKind::IntelHappy; }

  PolicyDecision decide(const DecodedAddress&, uint64_t addr) override {
    if (bits_.empty()) return PolicyDecision::keep_open(tick_ * cfg_.tr_init);
    uint64_t sum = 0;
    for (size_t i = 0; i < bits_.size(); ++i) sum += matching(addr, i).tr;
    uint64_t timeout = (sum * tick_ + bits_.size() / 2) / bits_.size();
    return PolicyDecision::keep_open(timeout == 0 ? 1 : timeout);
  }

  void train(const DecodedAddress& dec, uint64_t addr,
             const TrainContext& ctx) override {
    for (size_t i = 0; i < bits_.size(); ++i)
      matching(addr, i).observe(ctx, dec.row, geo_.trp, cfg_, 0);
  }

  const std::vector<unsigned>& positions() const { return bits_; }
  const MonitorUnit& unit(size_t i, bool bit_value) const {
    return bit_value ? one_[i] : zero_[i];
  }

 private:
  MonitorUnit& matching(uint64_t addr, size_t i) {
    return (addr >> bits_[i]) & 1 ? one_[i] : zero_[i];
  }

  std::vector<unsigned> bits_;
  DramGeometry geo_;
  PolicyConfig cfg_;
  uint32_t tick_;
  std::vector<MonitorUnit> zero_;
  std::vector<MonitorUnit> one_;
};

}  // namespace

std::unique_ptr<PagePolicy> make_policy(PolicyKind kind,
                                        const DramGeometry& geo,
                                        MappingScheme scheme,
                                        const PolicyConfig& cfg) {
  geo.validate();
  cfg.validate();
  switch (kind) {
    case PolicyKind::Open:
      return std::make_unique<OpenPolicy>();
    case PolicyKind::Close:
      return std::make_unique<ClosePolicy>();
    case PolicyKind::FixedOpen:
      return std::make_unique<FixedOpenPolicy>(geo.trc);
    case PolicyKind::Hybrid:
      return std::make_unique<HybridPolicy>(geo, cfg);
    case PolicyKind::IntelAdaptive:
      return std::make_unique<IntelAdaptivePolicy>(geo, cfg);
    case PolicyKind::HybridHappy:
      return std::make_unique<HybridHappyPolicy>(geo, scheme, cfg);
    case PolicyKind::IntelHappy:
      return std::make_unique<IntelHappyPolicy>(geo, scheme, cfg);
  }
  throw ConfigError("unhandled policy kind");
}

StorageCost storage_cost(PolicyKind kind, const DramGeometry& geo,
                         const PolicyConfig& cfg) {
  geo.validate();
  const uint64_t participant = geo.participant_bit_count();
  const uint64_t hybrid_bytes = bytes_per_counter(cfg.hybrid_counter_bits);
  const uint64_t mc_bytes = bytes_per_counter(4);
  const uint64_t tr_bytes = bytes_per_counter(log2_exact(cfg.tr_max) + 1);

  StorageCost cost;
  switch (kind) {
    case PolicyKind::Open:
    case PolicyKind::Close:
    case PolicyKind::FixedOpen:
      break;  // no prediction state
    case PolicyKind::Hybrid:
      cost.counters = geo.total_rows();  // X*Y*Z*W
      cost.bytes = cost.counters * hybrid_bytes;
      break;
    case PolicyKind::HybridHappy:
      cost.counters = participant * 2;
      cost.bytes = cost.counters * hybrid_bytes;
      break;
    case PolicyKind::IntelAdaptive:
      cost.counters = geo.total_banks() * 2;  // TR + MC per bank
      cost.bytes = geo.total_banks() * (mc_bytes + tr_bytes);
      break;
    case PolicyKind::IntelHappy:
      cost.counters = participant * 4;  // (TR + MC) per bit value per bit
      cost.bytes = participant * 2 * (mc_bytes + tr_bytes);
      break;
  }
  return cost;
}

}  // namespace pagesim
