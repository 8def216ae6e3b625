#ifndef UMBRA_STRUVE_HPP
#define UMBRA_STRUVE_HPP

#include <cmath>
#include <numbers>

#include "umbra/asymptotic.hpp"
#include "umbra/bessel.hpp"
#include "umbra/detail/hyperseries.hpp"
#include "umbra/error.hpp"
#include "umbra/policy.hpp"

namespace umbra {

/// Struve function H_alpha(x) = sum_k (-1)^k (x/2)^(2k+alpha+1) / (Gamma(k+3/2) Gamma(k+alpha+3/2)),
/// alpha >= -5, x >= 0 (x > 0 when alpha < -1).
inline SeriesResult struve_h(double alpha, double x, const EvalPolicy& policy = {}) {
  detail::require_finite(alpha, "struve_h");
  detail::require_finite(x, "struve_h");
  if (alpha < -5.0) throw domain_error("struve_h: order below -5");
  if (x < 0.0) throw domain_error("struve_h: negative argument");
  policy.validate();
  if (x == 0.0) {
    if (alpha > -1.0) return {0.0, 1, 0.0, EvalPath::series, true};
    if (alpha == -1.0) return {2.0 / std::numbers::pi, 1, 0.0, EvalPath::series, true};
    throw domain_error("struve_h: H_alpha(0) is singular for alpha < -1");
  }
  auto series = [&](bool extended) {
    const detail::RegSeries s({1.0}, {1.5, alpha + 1.5}, detail::SeriesArg::neg_half_square(x));
    SeriesResult r = detail::regularized_series(s, policy, extended);
    const double scale = std::pow(0.5 * x, alpha + 1.0);
    r.value *= scale;
    r.tail_estimate *= std::fabs(scale);
    return r;
  };
  return detail::require_converged(
      detail::three_path(x, policy, series, [&] { return struve_h_asymptotic(alpha, x); }), "struve_h");
}

}  // namespace umbra

#endif  // UMBRA_STRUVE_HPP
