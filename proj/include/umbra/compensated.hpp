#ifndef UMBRA_COMPENSATED_HPP
#define UMBRA_COMPENSATED_HPP

#include <cmath>

namespace umbra {

// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays exact
// when an addend is larger in magnitude than the running sum, which is the
// common case in alternating series.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  CompensatedSum& operator+=(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator-=(double v) { return *this += -v; }

  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace umbra

#endif  // UMBRA_COMPENSATED_HPP
