#ifndef UMBRA_HUMBERT_HPP
#define UMBRA_HUMBERT_HPP

// Multi-index Humbert-Bessel functions, 1F2 and the Delta auxiliary function.

#include <algorithm>
#include <cmath>
#include <string>

#include "umbra/bessel.hpp"
#include "umbra/compensated.hpp"
#include "umbra/detail/hyperseries.hpp"
#include "umbra/detail/trig.hpp"
#include "umbra/error.hpp"
#include "umbra/gamma.hpp"
#include "umbra/policy.hpp"

namespace umbra {

namespace detail {

inline detail::SeriesArg negated(double z) { return {z, 1, -1}; }

}  // namespace detail

/// J_{mu,nu}(z) = sum_k (-z)^k / (k! Gamma(k+mu+1) Gamma(k+nu+1)).
inline SeriesResult humbert2(double mu, double nu, double z, const EvalPolicy& policy = {}) {
  detail::require_finite(mu, "humbert2");
  detail::require_finite(nu, "humbert2");
  detail::require_finite(z, "humbert2");
  policy.validate();
  const detail::RegSeries s({}, {mu + 1.0, nu + 1.0}, detail::negated(z));
  return detail::require_converged(detail::regularized_series(s, policy), "humbert2");
}

/// J_{mu,nu,rho}(z) = sum_k (-z)^k / (k! Gamma(k+mu+1) Gamma(k+nu+1) Gamma(k+rho+1)).
inline SeriesResult humbert3(double mu, double nu, double rho, double z, const EvalPolicy& policy = {}) {
  detail::require_finite(mu, "humbert3");
  detail::require_finite(nu, "humbert3");
  detail::require_finite(rho, "humbert3");
  detail::require_finite(z, "humbert3");
  policy.validate();
  const detail::RegSeries s({}, {mu + 1.0, nu + 1.0, rho + 1.0}, detail::negated(z));
  return detail::require_converged(detail::regularized_series(s, policy), "humbert3");
}

inline double humbert2_series_term(double mu, double nu, double z, int k) {
  return detail::direct_term(detail::RegSeries({}, {mu + 1.0, nu + 1.0}, detail::negated(z)), k);
}

inline double humbert3_series_term(double mu, double nu, double rho, double z, int k) {
  return detail::direct_term(detail::RegSeries({}, {mu + 1.0, nu + 1.0, rho + 1.0}, detail::negated(z)), k);
}

/// 1F2(g; a, b; z). A nonpositive-integer a or b is accepted only when the
/// numerator terminates the series before the denominator vanishes.
inline SeriesResult hyp1f2(double g, double a, double b, double z, const EvalPolicy& policy = {}) {
  detail::require_finite(g, "hyp1f2");
  detail::require_finite(a, "hyp1f2");
  detail::require_finite(b, "hyp1f2");
  detail::require_finite(z, "hyp1f2");
  policy.validate();
  const bool a_pole = detail::is_nonpositive_integer(a);
  const bool b_pole = detail::is_nonpositive_integer(b);
  if (a_pole || b_pole) {
    // (a)_k vanishes for k > -a; the numerator (g)_k for k > -g.
    const double limit = std::min(a_pole ? -a : 1e300, b_pole ? -b : 1e300);
    if (!(detail::is_nonpositive_integer(g) && -g <= limit))
      throw domain_error("hyp1f2: denominator parameter " + std::to_string(a_pole ? a : b) +
                         " is a pole and the numerator does not terminate first");
    // Finite polynomial: sum_{k <= -g} (g)_k z^k / (k! (a)_k (b)_k).
    CompensatedSum sum;
    double t = 1.0;
    const int n = static_cast<int>(-g);
    sum += t;
    for (int k = 0; k < n; ++k) {
      t *= (g + k) * z / ((k + 1.0) * (a + k) * (b + k));
      sum += t;
    }
    SeriesResult r;
    r.value = sum.value();
    r.terms_used = n + 1;
    r.path = EvalPath::series;
    return r;
  }
  const detail::RegSeries s({g}, {a, b}, detail::SeriesArg::value(z));
  return detail::require_converged(detail::pochhammer_series(s, policy), "hyp1f2");
}

/// Delta_{alpha,beta,gamma}(x) = Gamma(gamma) / (Gamma(1+alpha) Gamma(1+beta)) 1F2(gamma; 1+alpha, 1+beta; -x^2/4),
/// in regularized form so that negative-integer alpha, beta kill leading terms.
inline double delta_fn(double alpha, double beta, double g, double x, const EvalPolicy& policy = {}) {
  detail::require_finite(alpha, "delta_fn");
  detail::require_finite(beta, "delta_fn");
  detail::require_finite(g, "delta_fn");
  detail::require_finite(x, "delta_fn");
  if (!(g > 0.0)) throw domain_error("delta_fn: gamma must be positive");
  policy.validate();
  const detail::RegSeries s({g}, {1.0 + alpha, 1.0 + beta}, detail::SeriesArg::neg_half_square(x));
  return gamma(g) * detail::require_converged(detail::regularized_series(s, policy), "delta_fn").value;
}

}  // namespace umbra

#endif  // UMBRA_HUMBERT_HPP
