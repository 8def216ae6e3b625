#ifndef UMBRA_DETAIL_TRIG_HPP
#define UMBRA_DETAIL_TRIG_HPP

#include <cmath>
#include <limits>
#include <numbers>

namespace umbra::detail {

// sin(pi x) and cos(pi x) with exact argument reduction; both return exact
// zeros and unit values at multiples of 1/2.
inline double sinpi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::remainder(x, 2.0);  // exact, in [-1, 1]
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  if (r == 0.0) return 0.0;
  return std::sin(std::numbers::pi * r);
}

inline double cospi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  const double a = std::fabs(std::remainder(x, 2.0));
  if (a <= 0.5) {
    const double r = 0.5 - a;
    return r == 0.0 ? 0.0 : std::sin(std::numbers::pi * r);
  }
  return -std::sin(std::numbers::pi * (a - 0.5));
}

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && std::floor(x) == x;
}

inline bool is_integer(double x) { return std::isfinite(x) && std::floor(x) == x; }

}  // namespace umbra::detail

#endif  // UMBRA_DETAIL_TRIG_HPP
