#pragma once

#include <cstdint>

namespace pagesim {

/// An n-bit saturating counter. Increment/decrement clamp at the bounds;
/// msb() reports whether the value is in the upper half of the range.
class SaturatingCounter {
 public:
  explicit SaturatingCounter(unsigned width_bits = 2, uint8_t initial = 0)
      : max_(uint8_t((1u << width_bits) - 1)),
        value_(initial > max_ ? max_ : initial) {}

  void increment() {
    if (value_ < max_) ++value_;
  }
  void decrement() {
    if (value_ > 0) --value_;
  }
  void set(uint8_t v) { value_ = v > max_ ? max_ : v; }

  uint8_t value() const { return value_; }
  uint8_t max() const { return max_; }
  bool msb() const { return value_ >= uint8_t((max_ + 1) / 2); }

 private:
  uint8_t max_;
  uint8_t value_ = 0;
};

}  // namespace pagesim
