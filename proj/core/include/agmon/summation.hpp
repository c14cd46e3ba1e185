#pragma once

#include <cmath>

namespace agmon {

/// Neumaier's variant of Kahan summation.
///
/// Accumulates terms in the order they are added and carries the rounding
/// error of every addition in a separate compensation term. The result is
/// accurate to a few ulps independent of the number of terms, as long as the
/// terms do not cancel catastrophically.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  void add(double term) {
    const double next = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term)) {
      compensation_ += (sum_ - next) + term;
    } else {
      compensation_ += (term - next) + sum_;
    }
    sum_ = next;
  }

  CompensatedSum& operator+=(double term) {
    add(term);
    return *this;
  }

  [[nodiscard]] double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace agmon
