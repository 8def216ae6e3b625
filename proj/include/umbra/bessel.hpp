#ifndef UMBRA_BESSEL_HPP
#define UMBRA_BESSEL_HPP

// Cylindrical and spherical Bessel functions of the first kind and I_0.

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "umbra/asymptotic.hpp"
#include "umbra/compensated.hpp"
#include "umbra/detail/hyperseries.hpp"
#include "umbra/detail/trig.hpp"
#include "umbra/error.hpp"
#include "umbra/gamma.hpp"
#include "umbra/policy.hpp"

namespace umbra {

namespace detail {

// Series below crossover_x (binary64 first), extended-precision series up to
// extended_x, asymptotic expansion beyond. The asymptotic result is replaced
// by the extended series when its own error estimate is too large, which
// happens for orders comparable to x.
template <class SeriesFn, class AsymFn>
SeriesResult three_path(double x, const EvalPolicy& policy, SeriesFn series, AsymFn asym) {
  if (x <= policy.crossover_x) return series(false);
  if (x <= policy.extended_x) return series(true);
  const AsymptoticValue a = asym();
  if (a.error > 1e-10 && a.error > policy.rel_tol * std::fabs(a.value)) {
    const SeriesResult s = series(true);
    if (s.converged) return s;
  }
  SeriesResult r;
  r.value = a.value;
  r.tail_estimate = a.error;
  r.path = EvalPath::asymptotic;
  r.converged = a.error <= policy.rel_tol * std::fabs(a.value);
  return r;
}

inline SeriesResult require_converged(SeriesResult r, const char* what) {
  if (r.path != EvalPath::asymptotic && !r.converged)
    throw convergence_error(std::string(what) + ": series did not converge within max_terms");
  return r;
}

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw domain_error(std::string(what) + ": non-finite argument");
}

inline SeriesResult closed(double v) {
  SeriesResult r;
  r.value = v;
  r.terms_used = 1;
  r.path = EvalPath::closed_form;
  return r;
}

}  // namespace detail

/// J_nu(x) for nu >= -50, x >= 0.
inline SeriesResult cyl_j(double nu, double x, const EvalPolicy& policy = {}) {
  detail::require_finite(nu, "cyl_j");
  detail::require_finite(x, "cyl_j");
  if (nu < -50.0) throw domain_error("cyl_j: order below -50");
  if (x < 0.0) throw domain_error("cyl_j: negative argument");
  policy.validate();

  const bool neg_int = nu < 0.0 && detail::is_integer(nu);
  if (neg_int) {  // J_{-n} = (-1)^n J_n
    SeriesResult r = cyl_j(-nu, x, policy);
    if (static_cast<long>(-nu) % 2 != 0) r.value = -r.value;
    return r;
  }
  if (x == 0.0) {
    if (nu == 0.0) return {1.0, 1, 0.0, EvalPath::series, true};
    if (nu > 0.0) return {0.0, 1, 0.0, EvalPath::series, true};
    throw domain_error("cyl_j: J_nu(0) is infinite for negative non-integer nu");
  }
  auto series = [&](bool extended) {
    const detail::RegSeries s({}, {nu + 1.0}, detail::SeriesArg::neg_half_square(x));
    SeriesResult r = detail::regularized_series(s, policy, extended);
    const double scale = std::pow(0.5 * x, nu);
    r.value *= scale;
    r.tail_estimate *= std::fabs(scale);
    return r;
  };
  return detail::require_converged(
      detail::three_path(x, policy, series, [&] { return cyl_j_asymptotic(nu, x); }), "cyl_j");
}

/// Modified Bessel function I_0(t), |t| <= 300.
inline double mod_i0(double t, const EvalPolicy& policy = {}) {
  detail::require_finite(t, "mod_i0");
  const double a = std::fabs(t);
  if (a > 300.0) throw overflow_error("mod_i0: |t| > 300");
  policy.validate();
  if (a == 0.0) return 1.0;
  const detail::RegSeries s({}, {1.0}, detail::SeriesArg::half_square(a));
  return detail::require_converged(detail::regularized_series(s, policy), "mod_i0").value;
}

/// Term k of the j_n series, (sqrt(pi)/2)(x/2)^n (-(x/2)^2)^k / (k! Gamma(n+3/2+k)).
inline double sph_j_series_term(int n, double x, int k) {
  const detail::RegSeries s({}, {n + 1.5}, detail::SeriesArg::neg_half_square(x));
  return 0.5 * std::sqrt(std::numbers::pi) * std::pow(0.5 * x, n) * detail::direct_term(s, k);
}

/// Spherical Bessel function j_n(x), |n| <= 100. Negative orders use the
/// trigonometric closed forms; negative x uses j_n(-x) = (-1)^n j_n(x).
inline SeriesResult sph_j(int n, double x, const EvalPolicy& policy = {}) {
  detail::require_finite(x, "sph_j");
  if (std::abs(n) > 100) throw domain_error("sph_j: |n| > 100");
  policy.validate();
  if (x < 0.0) {
    SeriesResult r = sph_j(n, -x, policy);
    if (n % 2 != 0) r.value = -r.value;
    return r;
  }
  if (n < 0) {
    if (x == 0.0) throw domain_error("sph_j: j_n(0) is singular for n < 0");
    // Downward recurrence f_{m-1} = (2m+1)/x f_m - f_{m+1}, stable for m < 0.
    double f1 = std::sin(x) / x;  // f_0
    double f0 = std::cos(x) / x;  // f_{-1}
    for (int m = -1; m > n; --m) {
      const double next = (2.0 * m + 1.0) / x * f0 - f1;
      f1 = f0;
      f0 = next;
    }
    if (!std::isfinite(f0)) throw overflow_error("sph_j: negative-order value overflows");
    return detail::closed(f0);
  }
  if (x == 0.0) return {n == 0 ? 1.0 : 0.0, 1, 0.0, EvalPath::series, true};
  auto series = [&](bool extended) {
    const detail::RegSeries s({}, {n + 1.5}, detail::SeriesArg::neg_half_square(x));
    SeriesResult r = detail::regularized_series(s, policy, extended);
    const double scale = 0.5 * std::sqrt(std::numbers::pi) * std::pow(0.5 * x, n);
    r.value *= scale;
    r.tail_estimate *= std::fabs(scale);
    return r;
  };
  auto asym = [&] {
    AsymptoticValue a = cyl_j_asymptotic(n + 0.5, x);
    const double f = std::sqrt(0.5 * std::numbers::pi / x);
    return AsymptoticValue{a.value * f, a.error * f};
  };
  return detail::require_converged(detail::three_path(x, policy, series, asym), "sph_j");
}

/// j_n written as P(1/x) sin x + Q(1/x) cos x with polynomial P, Q.
struct TrigPoly {
  std::vector<double> p;  // coefficients of u^i, u = 1/x
  std::vector<double> q;

  [[nodiscard]] double operator()(double x) const {
    const double u = 1.0 / x;
    return horner(p, u) * std::sin(x) + horner(q, u) * std::cos(x);
  }

  /// d/dx, using dP(u)/dx = -u^2 P'(u).
  [[nodiscard]] TrigPoly derivative() const {
    const std::vector<double> dp = u2_derivative(p);
    const std::vector<double> dq = u2_derivative(q);
    TrigPoly r;
    r.p = add(scale(dp, -1.0), scale(q, -1.0));
    r.q = add(p, scale(dq, -1.0));
    return r;
  }

  static double horner(const std::vector<double>& c, double u) {
    double s = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * u + *it;
    return s;
  }
  // u^2 dc/du
  static std::vector<double> u2_derivative(const std::vector<double>& c) {
    std::vector<double> r(c.size() + 1, 0.0);
    for (std::size_t i = 1; i < c.size(); ++i) r[i + 1] = static_cast<double>(i) * c[i];
    return r;
  }
  static std::vector<double> scale(std::vector<double> c, double f) {
    for (double& v : c) v *= f;
    return c;
  }
  static std::vector<double> add(std::vector<double> a, const std::vector<double>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  }
  static std::vector<double> shift_up(const std::vector<double>& c) {
    std::vector<double> r(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) r[i + 1] = c[i];
    return r;
  }
};

/// Trigonometric form of j_n obtained by applying j_{m+1} = (m/x) j_m - j_m'
/// symbolically n times to j_0 = u sin x.
inline TrigPoly rayleigh_poly(int n) {
  if (n < 0 || n > 30) throw domain_error("rayleigh_jn: n must lie in [0, 30]");
  TrigPoly t;
  t.p = {0.0, 1.0};
  t.q = {0.0};
  for (int m = 0; m < n; ++m) {
    const TrigPoly d = t.derivative();
    TrigPoly next;
    next.p = TrigPoly::add(TrigPoly::scale(TrigPoly::shift_up(t.p), m), TrigPoly::scale(d.p, -1.0));
    next.q = TrigPoly::add(TrigPoly::scale(TrigPoly::shift_up(t.q), m), TrigPoly::scale(d.q, -1.0));
    t = next;
  }
  return t;
}

/// j_n(x) = (-x)^n (x^-1 d/dx)^n j_0 in closed trigonometric form.
inline double rayleigh_jn(int n, double x) {
  detail::require_finite(x, "rayleigh_jn");
  if (x <= 0.0) throw domain_error("rayleigh_jn: x must be positive");
  return rayleigh_poly(n)(x);
}

/// n-th derivative of j_0 as n! sum_k (-1)^(n+k) (2x)^(-k) / (k!(n-2k)!) j_{n-k}(x).
inline double sph_j_deriv(int n, double x, const EvalPolicy& policy = {}) {
  detail::require_finite(x, "sph_j_deriv");
  if (n < 0 || n > 30) throw domain_error("sph_j_deriv: n must lie in [0, 30]");
  if (x <= 0.0) throw domain_error("sph_j_deriv: x must be positive");
  const Hermite2Coeffs c(n);
  CompensatedSum sum;
  for (int k = 0; k <= n / 2; ++k) {
    const double sign = ((n + k) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * c.coeffs[static_cast<std::size_t>(k)] * std::pow(2.0 * x, -k) * sph_j(n - k, x, policy).value;
  }
  return sum.value();
}

}  // namespace umbra

#endif  // UMBRA_BESSEL_HPP
