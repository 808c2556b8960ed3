#pragma once

#include <cstdlib>
#include <string>

#include "logdiv/errors.hpp"

namespace logdiv {

/// Reduction-step budget for the Groebner engine. One Budget is created per
/// top-level computation; exceeding it raises BudgetExceeded instead of
/// looping silently. LOGDIV_BUDGET (positive integer) overrides the default.
class Budget {
 public:
  static long long default_limit() {
    if (const char* s = std::getenv("LOGDIV_BUDGET")) {
      char* end = nullptr;
      long long v = std::strtoll(s, &end, 10);
      if (end != s && end && *end == '\0' && v > 0) return v;
    }
    return 10'000'000;
  }

  Budget() : limit_(default_limit()) {}
  explicit Budget(long long limit) : limit_(limit) {}

  void step(long long n = 1) {
    used_ += n;
    if (used_ > limit_)
      raise(errc::budget_exceeded,
            "reduction step budget of " + std::to_string(limit_) + " exceeded");
  }

  long long used() const { return used_; }
  long long limit() const { return limit_; }

 private:
  long long limit_;
  long long used_ = 0;
};

}  // namespace logdiv
