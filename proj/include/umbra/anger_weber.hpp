#ifndef UMBRA_ANGER_WEBER_HPP
#define UMBRA_ANGER_WEBER_HPP

// Auxiliary series S1, S2 and the Anger/Weber functions built from them:
//   S1(nu, x) = sum_k (-1)^k (x/2)^(2k) / (Gamma(k+1+nu/2) Gamma(k+1-nu/2))
//   S2(nu, x) = sum_k (-1)^k (x/2)^(2k+1) / (Gamma(k+3/2+nu/2) Gamma(k+3/2-nu/2))
//   J_nu = cos(nu pi/2) S1 + sin(nu pi/2) S2,  E_nu = sin(nu pi/2) S1 - cos(nu pi/2) S2.

#include <cmath>
#include <string>

#include "umbra/asymptotic.hpp"
#include "umbra/bessel.hpp"
#include "umbra/detail/hyperseries.hpp"
#include "umbra/detail/trig.hpp"
#include "umbra/error.hpp"
#include "umbra/policy.hpp"

namespace umbra {

namespace detail {

inline void check_s_args(double nu, double x, const char* what) {
  require_finite(nu, what);
  require_finite(x, what);
  if (std::fabs(nu) > 20.0) throw domain_error(std::string(what) + ": |nu| > 20");
  if (x < 0.0) throw domain_error(std::string(what) + ": negative argument");
}

}  // namespace detail

inline SeriesResult s1(double nu, double x, const EvalPolicy& policy = {}) {
  detail::check_s_args(nu, x, "s1");
  policy.validate();
  auto series = [&](bool extended) {
    const detail::RegSeries s({1.0}, {1.0 + 0.5 * nu, 1.0 - 0.5 * nu}, detail::SeriesArg::neg_half_square(x));
    return detail::regularized_series(s, policy, extended);
  };
  if (x == 0.0) return series(false);
  return detail::require_converged(detail::three_path(x, policy, series, [&] { return s1_asymptotic(nu, x); }),
                                   "s1");
}

inline SeriesResult s2(double nu, double x, const EvalPolicy& policy = {}) {
  detail::check_s_args(nu, x, "s2");
  policy.validate();
  if (x == 0.0) return {0.0, 1, 0.0, EvalPath::series, true};
  auto series = [&](bool extended) {
    const detail::RegSeries s({1.0}, {1.5 + 0.5 * nu, 1.5 - 0.5 * nu}, detail::SeriesArg::neg_half_square(x));
    SeriesResult r = detail::regularized_series(s, policy, extended);
    r.value *= 0.5 * x;
    r.tail_estimate *= 0.5 * x;
    return r;
  };
  return detail::require_converged(detail::three_path(x, policy, series, [&] { return s2_asymptotic(nu, x); }),
                                   "s2");
}

/// Anger function, angle nu pi/2 in the decomposition.
inline double anger(double nu, double x, const EvalPolicy& policy = {}) {
  const double c = detail::cospi(0.5 * nu);
  const double s = detail::sinpi(0.5 * nu);
  const double a = c == 0.0 ? 0.0 : c * s1(nu, x, policy).value;
  const double b = s == 0.0 ? 0.0 : s * s2(nu, x, policy).value;
  return a + b;
}

/// Weber function, angle nu pi/2 in the decomposition.
inline double weber(double nu, double x, const EvalPolicy& policy = {}) {
  const double c = detail::cospi(0.5 * nu);
  const double s = detail::sinpi(0.5 * nu);
  const double a = s == 0.0 ? 0.0 : s * s1(nu, x, policy).value;
  const double b = c == 0.0 ? 0.0 : c * s2(nu, x, policy).value;
  return a - b;
}

}  // namespace umbra

#endif  // UMBRA_ANGER_WEBER_HPP
