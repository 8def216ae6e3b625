#ifndef UMBRA_DETAIL_HYPERSERIES_HPP
#define UMBRA_DETAIL_HYPERSERIES_HPP

// Regularized hypergeometric-type series
//
//   R(a; b; z) = sum_k prod_i (a_i)_k z^k / (k! prod_j Gamma(b_j + k))
//
// which covers every Bessel, Struve, Humbert, Anger/Weber and 1F2 series in
// the library. Leading terms whose denominator Gamma has a pole are skipped
// (they are exactly zero); the rest are generated by the term ratio in the
// working precision. The sum is first attempted in binary64 and promoted to
// wider binary floating point when the accumulated cancellation makes
// binary64 unable to certify the requested relative tolerance.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "umbra/error.hpp"
#include "umbra/gamma.hpp"
#include "umbra/policy.hpp"

namespace umbra::detail {

template <unsigned Digits>
using mp_float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                               boost::multiprecision::et_off>;

/// z = sign * base^power, rebuilt in each working precision so that squares
/// such as (x/2)^2 carry no binary64 rounding into the extended sums.
struct SeriesArg {
  double base = 0.0;
  int power = 1;
  int sign = 1;

  static SeriesArg value(double z) { return {z, 1, 1}; }
  static SeriesArg neg_half_square(double x) { return {0.5 * x, 2, -1}; }
  static SeriesArg half_square(double x) { return {0.5 * x, 2, 1}; }

  [[nodiscard]] double as_double() const {
    const double p = std::pow(base, power);
    return sign < 0 ? -p : p;
  }

  template <class T>
  [[nodiscard]] T as() const {
    T b(base);
    T r(1);
    const int n = power < 0 ? -power : power;
    for (int i = 0; i < n; ++i) r *= b;
    if (power < 0) r = T(1) / r;
    return sign < 0 ? T(-r) : r;
  }
};

/// Parameter lists of a regularized series; at most two numerator and three
/// denominator parameters occur anywhere in the library.
struct RegSeries {
  std::array<double, 2> a{};
  std::array<double, 3> b{};
  int na = 0;
  int nb = 0;
  SeriesArg z;

  RegSeries(std::initializer_list<double> num, std::initializer_list<double> den, SeriesArg arg) : z(arg) {
    for (double v : num) a[static_cast<std::size_t>(na++)] = v;
    for (double v : den) b[static_cast<std::size_t>(nb++)] = v;
  }
};

/// First index whose denominator Gamma factors are all finite.
inline int first_live_index(const RegSeries& s) {
  int k0 = 0;
  for (int j = 0; j < s.nb; ++j) {
    const double b = s.b[static_cast<std::size_t>(j)];
    if (is_nonpositive_integer(b)) k0 = std::max(k0, static_cast<int>(-b) + 1);
  }
  return k0;
}

/// Index after which a numerator (a)_k has vanished, or -1 if none does.
inline int terminating_index(const RegSeries& s) {
  int m = -1;
  for (int i = 0; i < s.na; ++i) {
    const double a = s.a[static_cast<std::size_t>(i)];
    if (is_nonpositive_integer(a)) {
      const int mi = static_cast<int>(-a);
      m = m < 0 ? mi : std::min(m, mi);
    }
  }
  return m;
}

struct KernelOutcome {
  double sum = 0.0;            // normalized sum (leading live term = 1)
  double weighted_abs = 0.0;   // sum_m (m+2)|v_m|, drives the rounding estimate
  double last_term = 0.0;
  int terms = 0;
  bool converged = false;
  bool finite = true;
};

template <class T>
KernelOutcome sum_normalized(const RegSeries& s, int k0, double rel_tol, double abs_floor, int max_terms) {
  using std::abs;
  KernelOutcome out;
  const T z = s.z.template as<T>();
  T v(1);
  T sum(1);
  double weighted = 1.0;
  int small_run = 0;
  int m = 0;
  for (; m < max_terms; ++m) {
    const double k = static_cast<double>(k0 + m);
    T num = z;
    for (int i = 0; i < s.na; ++i) num *= T(s.a[static_cast<std::size_t>(i)]) + T(k);
    T den = T(k + 1.0);
    for (int j = 0; j < s.nb; ++j) den *= T(s.b[static_cast<std::size_t>(j)]) + T(k);
    const T ratio = num / den;
    v *= ratio;
    if (v == 0) {  // terminating numerator or zero argument
      out.converged = true;
      out.last_term = 0.0;
      ++m;
      break;
    }
    sum += v;
    const double av = static_cast<double>(abs(v));
    const double as = static_cast<double>(abs(sum));
    if (!std::isfinite(av) || !std::isfinite(as)) {
      out.finite = false;
      break;
    }
    weighted += av * static_cast<double>(m + 2);
    out.last_term = av;
    const bool decreasing = static_cast<double>(abs(ratio)) < 1.0;
    if (decreasing && av <= std::max(rel_tol * as, abs_floor)) {
      if (++small_run >= 2) {
        out.converged = true;
        ++m;
        break;
      }
    } else {
      small_run = 0;
    }
  }
  out.terms = m + 1;
  out.sum = static_cast<double>(sum);
  out.weighted_abs = weighted;
  if (!std::isfinite(out.sum)) out.finite = false;
  return out;
}

// Precision ladder: binary64, then roughly 50, 100, 200 and 400 decimal digits.
inline constexpr int precision_tiers = 5;

inline double tier_epsilon(int tier) {
  switch (tier) {
    case 0: return std::numeric_limits<double>::epsilon();
    case 1: return 1e-49;
    case 2: return 1e-99;
    case 3: return 1e-199;
    default: return 1e-300;  // 1e-399 is below the binary64 range
  }
}

inline KernelOutcome run_tier(int tier, const RegSeries& s, int k0, double rel_tol, double abs_floor, int max_terms) {
  switch (tier) {
    case 0: return sum_normalized<double>(s, k0, rel_tol, abs_floor, max_terms);
    case 1: return sum_normalized<mp_float<50>>(s, k0, rel_tol, abs_floor, max_terms);
    case 2: return sum_normalized<mp_float<100>>(s, k0, rel_tol, abs_floor, max_terms);
    case 3: return sum_normalized<mp_float<200>>(s, k0, rel_tol, abs_floor, max_terms);
    default: return sum_normalized<mp_float<400>>(s, k0, rel_tol, abs_floor, max_terms);
  }
}

/// lead * (normalized sum from index k0), with precision escalation.
inline SeriesResult sum_with_lead(const RegSeries& s, int k0, double lead, const EvalPolicy& policy,
                                  bool extended_start) {
  SeriesResult res;
  const double abs_floor = policy.abs_tol / std::fabs(lead);
  int tier = extended_start ? 1 : 0;
  double needed_scale = 0.0;  // weighted_abs from the first finite attempt
  KernelOutcome out;
  for (; tier < precision_tiers; ++tier) {
    if (needed_scale > 0.0 && tier_epsilon(tier) * needed_scale > 1e-3) continue;
    out = run_tier(tier, s, k0, policy.rel_tol, abs_floor, policy.max_terms);
    if (!out.finite) continue;
    if (needed_scale == 0.0) needed_scale = out.weighted_abs;
    const double rounding = tier_epsilon(tier) * out.weighted_abs;
    if (rounding <= 0.1 * policy.rel_tol * std::fabs(out.sum) || rounding * std::fabs(lead) <= policy.abs_tol)
      break;
    if (tier == precision_tiers - 1) break;
  }
  if (!out.finite) throw overflow_error("series: partial sums overflow in every working precision");

  res.value = lead * out.sum;
  res.terms_used = out.terms + k0;
  res.tail_estimate = std::fabs(lead) * out.last_term;
  res.converged = out.converged;
  res.path = tier == 0 ? EvalPath::series : EvalPath::extended_precision_series;
  return res;
}

/// Evaluates R(a; b; z). `extended_start` skips the binary64 attempt.
inline SeriesResult regularized_series(const RegSeries& s, const EvalPolicy& policy, bool extended_start = false) {
  SeriesResult res;
  const int k0 = first_live_index(s);
  const int kt = terminating_index(s);
  if (kt >= 0 && kt < k0) {  // every live term already killed by the numerator
    res.value = 0.0;
    res.terms_used = 0;
    res.path = EvalPath::series;
    return res;
  }

  // Leading live term in binary64; its rounding only scales the result.
  const double zd = s.z.as_double();
  double lead = std::pow(zd, k0) * rgamma(static_cast<double>(k0) + 1.0);
  for (int i = 0; i < s.na; ++i) {
    const double a = s.a[static_cast<std::size_t>(i)];
    for (int j = 0; j < k0; ++j) lead *= a + j;
  }
  for (int j = 0; j < s.nb; ++j) lead *= rgamma(s.b[static_cast<std::size_t>(j)] + k0);
  if (lead == 0.0) {
    res.value = 0.0;
    res.terms_used = 1;
    res.path = extended_start ? EvalPath::extended_precision_series : EvalPath::series;
    return res;
  }
  if (!std::isfinite(lead)) throw overflow_error("series: leading term overflows binary64");

  return sum_with_lead(s, k0, lead, policy, extended_start);
}

/// Unregularized companion sum_k prod (a_i)_k z^k / (k! prod (b_j)_k); the
/// caller guarantees no denominator parameter is a nonpositive integer.
inline SeriesResult pochhammer_series(const RegSeries& s, const EvalPolicy& policy, bool extended_start = false) {
  return sum_with_lead(s, 0, 1.0, policy, extended_start);
}

/// Term k of R(a; b; z) built from powers and reciprocal gammas rather than
/// from the term ratio.
inline double direct_term(const RegSeries& s, int k) {
  double t = std::pow(s.z.as_double(), k) * rgamma(k + 1.0);
  for (int i = 0; i < s.na; ++i) {
    const double a = s.a[static_cast<std::size_t>(i)];
    for (int j = 0; j < k; ++j) t *= a + j;
  }
  for (int j = 0; j < s.nb; ++j) t *= rgamma(s.b[static_cast<std::size_t>(j)] + k);
  return t;
}

}  // namespace umbra::detail

#endif  // UMBRA_DETAIL_HYPERSERIES_HPP
