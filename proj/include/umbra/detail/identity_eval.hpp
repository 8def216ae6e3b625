#ifndef UMBRA_DETAIL_IDENTITY_EVAL_HPP
#define UMBRA_DETAIL_IDENTITY_EVAL_HPP

// Building blocks for the identity catalog: finite differences, Poisson
// integrals, Abel-regularized Mellin integrals and the split-tail integrals
// whose algebraic parts are known in closed form.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "umbra/anger_weber.hpp"
#include "umbra/asymptotic.hpp"
#include "umbra/bessel.hpp"
#include "umbra/compensated.hpp"
#include "umbra/detail/hyperseries.hpp"
#include "umbra/detail/trig.hpp"
#include "umbra/error.hpp"
#include "umbra/gamma.hpp"
#include "umbra/humbert.hpp"
#include "umbra/policy.hpp"
#include "umbra/quadrature.hpp"
#include "umbra/struve.hpp"

namespace umbra::detail {

inline constexpr double fd_step = 1e-3;

/// Five-point central first derivative.
inline double fd1(const std::function<double(double)>& f, double x, double h = fd_step) {
  return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
}

/// Five-point central second derivative.
inline double fd2(const std::function<double(double)>& f, double x, double h = fd_step) {
  return (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h * h);
}

/// sin(sqrt(q))/sqrt(q), continued as sinh(sqrt(-q))/sqrt(-q) for q < 0.
inline double sinc_sqrt(double q) {
  if (q == 0.0) return 1.0;
  if (q > 0.0) {
    const double r = std::sqrt(q);
    return std::sin(r) / r;
  }
  const double r = std::sqrt(-q);
  return std::sinh(r) / r;
}

inline QuadraturePlan tight_plan(double rel = 1e-13, double abs = 1e-14) {
  QuadraturePlan p;
  p.target_abs = abs;
  p.target_rel = rel;
  return p;
}

/// J_nu(x) = (x/2)^nu / (sqrt(pi) Gamma(nu+1/2)) int_0^pi cos(x cos t) sin^(2nu) t dt, nu > -1/2.
inline double poisson_j(double nu, double x) {
  if (!(nu > -0.5)) throw domain_error("poisson_j: order must exceed -1/2");
  const auto f = [&](double t) { return std::cos(x * std::cos(t)) * std::pow(std::sin(t), 2.0 * nu); };
  const double i = integrate_finite(f, 0.0, std::numbers::pi, tight_plan()).value;
  return std::pow(0.5 * x, nu) * rgamma(nu + 0.5) / std::sqrt(std::numbers::pi) * i;
}

/// H_a(x) = 2 (x/2)^a / (sqrt(pi) Gamma(a+1/2)) int_0^(pi/2) sin(x cos t) sin^(2a) t dt, a > -1/2.
inline double poisson_h(double a, double x) {
  if (!(a > -0.5)) throw domain_error("poisson_h: order must exceed -1/2");
  const auto f = [&](double t) { return std::sin(x * std::cos(t)) * std::pow(std::sin(t), 2.0 * a); };
  const double i = integrate_finite(f, 0.0, 0.5 * std::numbers::pi, tight_plan()).value;
  return 2.0 * std::pow(0.5 * x, a) * rgamma(a + 0.5) / std::sqrt(std::numbers::pi) * i;
}

/// (x/2)^a / (sqrt(pi) Gamma(a + 3/2)), the inhomogeneous term of the Struve relations.
inline double struve_source(double a, double x) {
  return std::pow(0.5 * x, a) * rgamma(a + 1.5) / std::sqrt(std::numbers::pi);
}

/// Anger (weber = false) or Weber function from its defining integral over [0, pi].
inline double anger_weber_integral(double nu, double x, bool weber) {
  const auto f = [&](double t) {
    const double arg = nu * t - x * std::sin(t);
    return weber ? std::sin(arg) : std::cos(arg);
  };
  return integrate_finite(f, 0.0, std::numbers::pi, tight_plan(1e-14)).value / std::numbers::pi;
}

// Abel-damped Mellin integral
//   F(X) = int_0^inf t^(a-1) e^(-t/X) J_{mu,nu}(t) dt = Gamma(a) X^a R(a; mu+1, nu+1; -X),
// extrapolated to X -> inf by two Richardson levels on X = 2500 * 2^j.
inline constexpr int abel_levels = 5;
inline constexpr double abel_first_x = 2500.0;

inline double abel_damped(double a, double mu, double nu, double X) {
  EvalPolicy p;
  p.max_terms = 4000;
  p.rel_tol = 1e-15;
  const RegSeries s({a}, {mu + 1.0, nu + 1.0}, SeriesArg{X, 1, -1});
  const SeriesResult r = regularized_series(s, p, true);
  if (!r.converged) throw convergence_error("abel_damped: damped series did not converge");
  return gamma(a) * std::pow(X, a) * r.value;
}

/// Regularized int_0^inf x^(a-1) J_{mu,nu}(x) dx. Throws convergence_error
/// when the extrapolated sequence has not settled to rel_tol.
inline double abel_mellin(double a, double mu, double nu, double rel_tol = 1e-5) {
  if (!(a > 0.0)) throw domain_error("abel_mellin: exponent must be positive");
  std::vector<double> f;
  for (int j = 0; j < abel_levels; ++j) f.push_back(abel_damped(a, mu, nu, abel_first_x * std::ldexp(1.0, j)));
  std::vector<double> r1;
  for (std::size_t j = 1; j < f.size(); ++j) r1.push_back(2.0 * f[j] - f[j - 1]);
  std::vector<double> r2;
  for (std::size_t j = 1; j < r1.size(); ++j) r2.push_back((4.0 * r1[j] - r1[j - 1]) / 3.0);
  const double v = r2.back();
  const double change = std::fabs(v - r2[r2.size() - 2]);
  if (!(change <= rel_tol * std::max(1.0, std::fabs(v))))
    throw convergence_error("abel_mellin: regularized limit not reached (last change " + std::to_string(change) +
                            ")");
  return v;
}

// Split point of the tail integrals: beyond it every oscillating evaluator is
// on its asymptotic path and the algebraic part is subtracted in closed form.
inline constexpr double tail_split = 60.0;
inline constexpr int tail_terms = 10;

/// Algebraic part of H_a - Y_a: (1/pi) Gamma(k+1/2) 2^(2k+1-a) / Gamma(a+1/2-k) x^(a-2k-1).
inline AsymptoticSeries struve_tail_terms(double a) {
  AsymptoticSeries g;
  for (int k = 0; k < tail_terms; ++k) {
    const double c = std::tgamma(k + 0.5) * std::pow(2.0, 2.0 * k + 1.0 - a) * rgamma(a + 0.5 - k) / std::numbers::pi;
    if (c != 0.0) g.terms.push_back({c, a - 2.0 * k - 1.0});
  }
  return g;
}

/// int_0^inf H_a(x) dx for -2 < a < 0.
inline QuadratureResult struve_integral(double a) {
  const Integrand f = [a](double x) { return struve_h(a, x).value; };
  return integrate_split_tail(f, 0.0, tail_split, struve_tail_terms(a), std::numbers::pi, tight_plan(1e-11, 1e-12));
}

/// Odd part (2/pi) sin(nu pi/2) sum e_(2j+1) of S1: e_1 = -nu/x^2, e_(k+2) = e_k (nu^2-(k+1)^2)/x^2.
inline AsymptoticSeries s1_tail_terms(double nu) {
  AsymptoticSeries g;
  const double w = (2.0 / std::numbers::pi) * sinpi(0.5 * nu);
  if (w == 0.0 || nu == 0.0) return g;
  double c = -nu;
  for (int j = 0; j < tail_terms && c != 0.0; ++j) {
    const int k = 2 * j + 1;
    g.terms.push_back({w * c, -(k + 1.0)});
    c *= nu * nu - (k + 1.0) * (k + 1.0);
  }
  return g;
}

/// Even part of S2 divided by x: (2/pi) cos(nu pi/2) sum e_(2j) / x.
inline AsymptoticSeries s2_over_x_tail_terms(double nu) {
  AsymptoticSeries g;
  const double w = (2.0 / std::numbers::pi) * cospi(0.5 * nu);
  if (w == 0.0) return g;
  double c = 1.0;
  for (int j = 0; j < tail_terms && c != 0.0; ++j) {
    const int k = 2 * j;
    g.terms.push_back({w * c, -(k + 2.0)});
    c *= nu * nu - (k + 1.0) * (k + 1.0);
  }
  return g;
}

inline QuadratureResult s1_integral(double nu) {
  const Integrand f = [nu](double x) { return s1(nu, x).value; };
  return integrate_split_tail(f, 0.0, tail_split, s1_tail_terms(nu), std::numbers::pi, tight_plan(1e-11, 1e-12));
}

inline QuadratureResult s2_over_x_integral(double nu) {
  const Integrand f = [nu](double x) {
    if (x == 0.0) return 0.5 * rgamma(1.5 + 0.5 * nu) * rgamma(1.5 - 0.5 * nu);
    return s2(nu, x).value / x;
  };
  return integrate_split_tail(f, 0.0, tail_split, s2_over_x_tail_terms(nu), std::numbers::pi, tight_plan(1e-11, 1e-12));
}

/// Non-oscillating part of (x/2)^(-mu-nu) J_mu J_nu from the Hankel expansions:
/// (1/(pi x)) (x/2)^(-mu-nu) [(PaPb + QaQb) cos(A-B) + (QaPb - PaQb) sin(A-B)], A - B = (mu-nu) pi/2.
inline AsymptoticSeries bessel_product_tail_terms(double mu, double nu) {
  const int K = tail_terms;
  const std::vector<double> a = hankel_coefficients(mu, K);
  const std::vector<double> b = hankel_coefficients(nu, K);
  auto split = [K](const std::vector<double>& c, std::vector<double>& p, std::vector<double>& q) {
    p.assign(static_cast<std::size_t>(K) + 1, 0.0);
    q.assign(static_cast<std::size_t>(K) + 1, 0.0);
    for (int i = 0; i <= K; ++i) {
      const double sign = ((i / 2) % 2 == 0) ? 1.0 : -1.0;
      (i % 2 == 0 ? p : q)[static_cast<std::size_t>(i)] = sign * c[static_cast<std::size_t>(i)];
    }
  };
  std::vector<double> pa, qa, pb, qb;
  split(a, pa, qa);
  split(b, pb, qb);
  const double c = cospi(0.5 * (mu - nu));
  const double s = sinpi(0.5 * (mu - nu));
  AsymptoticSeries g;
  const double scale = std::pow(2.0, mu + nu) / std::numbers::pi;
  for (int n = 0; n <= K; ++n) {
    CompensatedSum sum;
    for (int i = 0; i <= n; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const auto v = static_cast<std::size_t>(n - i);
      sum += (pa[u] * pb[v] + qa[u] * qb[v]) * c + (qa[u] * pb[v] - pa[u] * qb[v]) * s;
    }
    if (sum.value() != 0.0) g.terms.push_back({scale * sum.value(), -1.0 - mu - nu - n});
  }
  return g;
}

inline QuadratureResult bessel_product_integral(double mu, double nu) {
  const Integrand f = [mu, nu](double x) {
    if (x == 0.0) return rgamma(mu + 1.0) * rgamma(nu + 1.0);
    return std::pow(0.5 * x, -mu - nu) * cyl_j(mu, x).value * cyl_j(nu, x).value;
  };
  return integrate_split_tail(f, 0.0, tail_split, bessel_product_tail_terms(mu, nu), 0.5 * std::numbers::pi,
                              tight_plan(1e-11, 1e-12));
}

/// int_R j_n: both half lines integrated separately.
inline double sph_j_line_integral(int n, bool use_symmetry) {
  QuadraturePlan p = tight_plan(1e-11, 1e-12);
  p.domain = Domain::real_line();
  // Start the accelerated cells past the turning point x ~ n and where the
  // phase drift n(n+1)/(2x) no longer shifts the cell boundaries noticeably.
  p.strategy = Strategy::oscillatory(std::numbers::pi, (10.0 + n + 0.25 * n * (n + 1)) * std::numbers::pi);
  if (use_symmetry) p.symmetry = Symmetry::even;
  const Integrand f = [n](double x) { return sph_j(n, x).value; };
  return integrate(f, p).value;
}

/// sum_{|m|,|n| <= M} u^m v^n J_{m,n}(x).
inline double humbert_generating_sum(double u, double v, double x, int M, const EvalPolicy& policy = {}) {
  CompensatedSum s;
  for (int m = -M; m <= M; ++m)
    for (int n = -M; n <= M; ++n) s += std::pow(u, m) * std::pow(v, n) * humbert2(m, n, x, policy).value;
  return s.value();
}

/// sum_{|m|,|n| <= M} u^m v^n Delta_{m,n,g}(x).
inline double delta_generating_sum(double g, double u, double v, double x, int M, const EvalPolicy& policy = {}) {
  CompensatedSum s;
  for (int m = -M; m <= M; ++m)
    for (int n = -M; n <= M; ++n) s += std::pow(u, m) * std::pow(v, n) * delta_fn(m, n, g, x, policy);
  return s.value();
}

}  // namespace umbra::detail

#endif  // UMBRA_DETAIL_IDENTITY_EVAL_HPP
