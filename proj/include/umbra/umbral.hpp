#ifndef UMBRA_UMBRAL_HPP
#define UMBRA_UMBRAL_HPP

// Finite umbral expressions over up to three positional symbols c_1, c_2, c_3
// with the reduction rule c_i^a phi_i(0) = 1/Gamma(1+a), truncated umbral
// exponentials, and the Gaussian and Laplace rewrite rules.

#include <array>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <string>
#include <vector>

#include "umbra/compensated.hpp"
#include "umbra/error.hpp"
#include "umbra/gamma.hpp"
#include "umbra/policy.hpp"

namespace umbra {

inline constexpr int umbral_max_order = 500;
inline constexpr int umbral_default_order = 60;

struct UmbralTerm {
  double coeff = 0.0;
  std::array<double, 3> exponents{};
};

class UmbralExpr {
 public:
  explicit UmbralExpr(int symbol_count = 1) : symbols_(symbol_count) {
    if (symbol_count < 1 || symbol_count > 3) throw domain_error("UmbralExpr: symbol count must be 1, 2 or 3");
  }

  UmbralExpr& add(double coeff, std::initializer_list<double> exponents) {
    if (static_cast<int>(exponents.size()) != symbols_)
      throw domain_error("UmbralExpr: exponent count does not match symbol count");
    UmbralTerm t;
    t.coeff = coeff;
    std::size_t i = 0;
    for (double e : exponents) t.exponents[i++] = e;
    terms_.push_back(t);
    return *this;
  }

  UmbralExpr& add(const UmbralTerm& t) {
    terms_.push_back(t);
    return *this;
  }

  [[nodiscard]] int symbol_count() const { return symbols_; }
  [[nodiscard]] const std::vector<UmbralTerm>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  UmbralExpr& operator*=(double s) {
    for (auto& t : terms_) t.coeff *= s;
    return *this;
  }

  friend UmbralExpr operator*(double s, UmbralExpr e) { return e *= s; }

  friend UmbralExpr operator+(UmbralExpr a, const UmbralExpr& b) {
    if (a.symbols_ != b.symbols_) throw domain_error("UmbralExpr: symbol counts differ");
    a.terms_.insert(a.terms_.end(), b.terms_.begin(), b.terms_.end());
    return a;
  }

 private:
  int symbols_;
  std::vector<UmbralTerm> terms_;
};

/// Value of one monomial after reduction: coeff * prod_i 1/Gamma(1 + e_i).
inline double reduce_term(const UmbralTerm& t, int symbol_count) {
  double v = t.coeff;
  for (int i = 0; i < symbol_count; ++i) v *= rgamma(1.0 + t.exponents[static_cast<std::size_t>(i)]);
  return v;
}

inline double reduce(const UmbralExpr& e) {
  CompensatedSum s;
  for (const auto& t : e.terms()) s += reduce_term(t, e.symbol_count());
  return s.value();
}

/// weight * c^a exp(sign * z * c^d), truncated at order N.
struct UmbralExpSeries {
  std::vector<double> prefactor_exponents{0.0};
  std::vector<int> step_degrees{1};
  double scale = 0.0;
  int sign = 1;
  int order = umbral_default_order;
  double weight = 1.0;
};

namespace detail {

// (s z)^k / k!, in log space once the direct form leaves binary64.
inline double exp_coeff(double sz, int k) {
  if (k <= 170) {
    const double p = std::pow(sz, k);
    if (std::isfinite(p)) return p * rgamma(k + 1.0);
  }
  if (sz == 0.0) return 0.0;
  const double mag = std::exp(k * std::log(std::fabs(sz)) - std::lgamma(k + 1.0));
  return (sz < 0.0 && k % 2 != 0) ? -mag : mag;
}

}  // namespace detail

inline UmbralExpr expand(const UmbralExpSeries& s) {
  const int n = static_cast<int>(s.prefactor_exponents.size());
  if (n < 1 || n > 3) throw domain_error("expand: between 1 and 3 symbols required");
  if (static_cast<int>(s.step_degrees.size()) != n)
    throw domain_error("expand: prefactor and step vectors differ in length");
  for (int d : s.step_degrees)
    if (d < 0) throw domain_error("expand: step degrees must be nonnegative");
  if (s.order < 0 || s.order > umbral_max_order)
    throw domain_error("expand: order must lie in [0, " + std::to_string(umbral_max_order) + "]");
  if (s.sign != 1 && s.sign != -1) throw domain_error("expand: sign must be +1 or -1");

  UmbralExpr e(n);
  const double sz = s.sign * s.scale;
  for (int k = 0; k <= s.order; ++k) {
    UmbralTerm t;
    t.coeff = s.weight * detail::exp_coeff(sz, k);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
      t.exponents[i] = s.prefactor_exponents[i] + k * s.step_degrees[i];
    e.add(t);
  }
  return e;
}

/// int_R c^a exp(-c q x^2 + c p x) dx = sqrt(pi/q) c^(a-1/2) exp(c p^2/(4q)).
inline UmbralExpSeries gaussian_reduce(double a, double q, double p, int order = umbral_default_order) {
  if (!(q > 0.0)) throw domain_error("gaussian_reduce: q must be positive");
  UmbralExpSeries s;
  s.prefactor_exponents = {a - 0.5};
  s.step_degrees = {1};
  s.scale = p * p / (4.0 * q);
  s.sign = 1;
  s.order = order;
  s.weight = std::sqrt(std::numbers::pi / q);
  return s;
}

/// int_0^inf s^(g-1) exp(-s(1 + c1 c2 w)) ds = Gamma(g) (1 + c1 c2 w)^(-g), expanded to
/// order N with prefactor c1^alpha c2^beta.
inline UmbralExpr laplace_reduce(double g, double w, double alpha, double beta, int order) {
  if (!(g > 0.0)) throw domain_error("laplace_reduce: gamma exponent must be positive");
  if (!std::isfinite(w) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw domain_error("laplace_reduce: non-finite parameter");
  if (order < 1 || order > umbral_max_order)
    throw domain_error("laplace_reduce: order must lie in [1, " + std::to_string(umbral_max_order) + "]");
  UmbralExpr e(2);
  double c = gamma(g);
  for (int k = 0; k <= order; ++k) {
    e.add(c, {alpha + k, beta + k});
    c *= -w * (g + k) / (k + 1.0);
  }
  return e;
}

/// Reduced value together with the size of the last term, certified when the
/// last two terms are below rel_tol times the partial sum.
inline SeriesResult reduce_certified(const UmbralExpr& e, double rel_tol) {
  SeriesResult r;
  CompensatedSum s;
  double last = 0.0;
  double before_last = 0.0;
  for (const auto& t : e.terms()) {
    const double v = reduce_term(t, e.symbol_count());
    s += v;
    before_last = last;
    last = std::fabs(v);
  }
  r.value = s.value();
  r.terms_used = static_cast<int>(e.size());
  r.tail_estimate = last;
  r.path = EvalPath::series;
  r.converged = last <= rel_tol * std::fabs(r.value) && before_last <= rel_tol * std::fabs(r.value);
  return r;
}

/// Umbral image of J_nu(x): c^nu exp(-c (x/2)^2), times (x/2)^nu.
inline UmbralExpSeries umbral_cyl_j_series(double nu, double x, int order = umbral_default_order) {
  UmbralExpSeries s;
  s.prefactor_exponents = {nu};
  s.step_degrees = {1};
  s.scale = (0.5 * x) * (0.5 * x);
  s.sign = -1;
  s.order = order;
  return s;
}

/// j_n(x) = sqrt(pi/(2x)) (x/2)^(n+1/2) c^(n+1/2) exp(-c (x/2)^2).
inline SeriesResult umbral_sph_j(int n, double x, int order = umbral_default_order, double rel_tol = 1e-12) {
  if (!(x > 0.0)) throw domain_error("umbral_sph_j: x must be positive");
  SeriesResult r = reduce_certified(expand(umbral_cyl_j_series(n + 0.5, x, order)), rel_tol);
  const double f = std::sqrt(0.5 * std::numbers::pi / x) * std::pow(0.5 * x, n + 0.5);
  r.value *= f;
  r.tail_estimate *= std::fabs(f);
  return r;
}

/// J_{mu,nu}(z) = c1^mu c2^nu exp(-c1 c2 z).
inline UmbralExpSeries umbral_humbert2_series(double mu, double nu, double z, int order = umbral_default_order) {
  UmbralExpSeries s;
  s.prefactor_exponents = {mu, nu};
  s.step_degrees = {1, 1};
  s.scale = z;
  s.sign = -1;
  s.order = order;
  return s;
}

/// J_{mu,nu,rho}(z) = c1^mu c2^nu c3^rho exp(-c1 c2 c3 z).
inline UmbralExpSeries umbral_humbert3_series(double mu, double nu, double rho, double z,
                                              int order = umbral_default_order) {
  UmbralExpSeries s;
  s.prefactor_exponents = {mu, nu, rho};
  s.step_degrees = {1, 1, 1};
  s.scale = z;
  s.sign = -1;
  s.order = order;
  return s;
}

inline SeriesResult umbral_humbert2(double mu, double nu, double z, int order = umbral_default_order,
                                    double rel_tol = 1e-12) {
  return reduce_certified(expand(umbral_humbert2_series(mu, nu, z, order)), rel_tol);
}

inline SeriesResult umbral_humbert3(double mu, double nu, double rho, double z, int order = umbral_default_order,
                                    double rel_tol = 1e-12) {
  return reduce_certified(expand(umbral_humbert3_series(mu, nu, rho, z, order)), rel_tol);
}

/// b(t) = sum_n b_n t^n / n! through the Gaussian rule applied to
/// j_0 = (sqrt(pi)/2) c^(1/2) exp(-c x^2/4); the linear coefficient that
/// reproduces b_2n = sqrt(pi) Gamma(n+1/2)/n! is p = t/2.
inline SeriesResult umbral_b(double t, int order = umbral_default_order, double rel_tol = 1e-12) {
  SeriesResult r = reduce_certified(expand(gaussian_reduce(0.5, 0.25, 0.5 * t, order)), rel_tol);
  const double f = 0.5 * std::sqrt(std::numbers::pi);
  r.value *= f;
  r.tail_estimate *= f;
  return r;
}

}  // namespace umbra

#endif  // UMBRA_UMBRAL_HPP
