#pragma once

#include "shadowbench/errors.hpp"

namespace shadowbench {

// Forward-model call meter. Every engine advance charges exactly one call;
// going past the cap throws instead of silently over-spending.
class BudgetMeter {
 public:
  explicit BudgetMeter(int cap) : cap_(cap) {}

  int used() const { return used_; }
  int cap() const { return cap_; }
  int remaining() const { return cap_ - used_; }
  bool exhausted() const { return used_ >= cap_; }

  void charge() {
    if (used_ >= cap_) {
      throw BudgetExhaustedError("forward-model budget exhausted (cap " +
                                 std::to_string(cap_) + ")");
    }
    ++used_;
  }

  void reset() { used_ = 0; }

 private:
  int used_ = 0;
  int cap_;
};

}  // namespace shadowbench
