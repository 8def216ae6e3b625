#ifndef UMBRA_ASYMPTOTIC_HPP
#define UMBRA_ASYMPTOTIC_HPP

// Large-argument expansions: Hankel amplitudes for J and Y, the algebraic
// Struve correction H - Y, and the algebraic part of the Anger/Weber
// auxiliaries. Each sum stops at its smallest term.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "umbra/compensated.hpp"
#include "umbra/detail/trig.hpp"
#include "umbra/gamma.hpp"

namespace umbra {

struct HankelPQ {
  double p = 1.0;
  double q = 0.0;
  double error = 0.0;  // size of the first omitted term
};

/// P(nu, x) and Q(nu, x) of the Hankel expansion.
inline HankelPQ hankel_pq(double nu, double x, int max_terms = 200) {
  HankelPQ r;
  r.p = 1.0;
  r.q = 0.0;
  const double mu = 4.0 * nu * nu;
  // Half-integer orders give a finite, exact sum; only rounding limits it.
  const bool finite = detail::is_integer(nu - 0.5);
  double largest = 1.0;
  double t = 1.0;
  double prev = 1.0;
  for (int k = 0; k < max_terms; ++k) {
    const double odd = 2.0 * k + 1.0;
    const double next = t * (mu - odd * odd) / (8.0 * (k + 1.0) * x);
    if (next == 0.0) {
      r.error = finite ? 4.0 * std::numeric_limits<double>::epsilon() * largest : 0.0;
      return r;
    }
    largest = std::max(largest, std::fabs(next));
    if (!finite && std::fabs(next) > prev && k > 0) {
      r.error = prev;
      return r;
    }
    const int j = k + 1;
    const double sign = ((j / 2) % 2 == 0) ? 1.0 : -1.0;
    if (j % 2 == 0)
      r.p += sign * next;
    else
      r.q += sign * next;
    prev = std::fabs(next);
    t = next;
    if (prev < 1e-17 * (std::fabs(r.p) + std::fabs(r.q))) {
      r.error = prev;
      return r;
    }
  }
  r.error = prev;
  return r;
}

/// a_k(nu) = prod_{i=1..k} (4nu^2 - (2i-1)^2) / (k! 8^k), k = 0..K, so that
/// P = sum_j (-1)^j a_{2j} x^{-2j} and Q = sum_j (-1)^j a_{2j+1} x^{-2j-1}.
inline std::vector<double> hankel_coefficients(double nu, int K) {
  std::vector<double> a(static_cast<std::size_t>(K) + 1, 0.0);
  const double mu = 4.0 * nu * nu;
  a[0] = 1.0;
  for (int k = 1; k <= K; ++k) {
    const double odd = 2.0 * k - 1.0;
    a[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k - 1)] * (mu - odd * odd) / (8.0 * k);
  }
  return a;
}

struct AsymptoticValue {
  double value = 0.0;
  double error = 0.0;
};

namespace detail {

// cos(x - s pi) and sin(x - s pi) without rounding s pi.
inline double cos_shift(double x, double s) { return std::cos(x) * cospi(s) + std::sin(x) * sinpi(s); }
inline double sin_shift(double x, double s) { return std::sin(x) * cospi(s) - std::cos(x) * sinpi(s); }

}  // namespace detail

/// J_nu(x) for large x.
inline AsymptoticValue cyl_j_asymptotic(double nu, double x) {
  const HankelPQ h = hankel_pq(nu, x);
  const double amp = std::sqrt(2.0 / (std::numbers::pi * x));
  const double s = 0.5 * nu + 0.25;
  return {amp * (h.p * detail::cos_shift(x, s) - h.q * detail::sin_shift(x, s)), amp * h.error};
}

/// Y_nu(x) for large x.
inline AsymptoticValue cyl_y_asymptotic(double nu, double x) {
  const HankelPQ h = hankel_pq(nu, x);
  const double amp = std::sqrt(2.0 / (std::numbers::pi * x));
  const double s = 0.5 * nu + 0.25;
  return {amp * (h.p * detail::sin_shift(x, s) + h.q * detail::cos_shift(x, s)), amp * h.error};
}

/// H_alpha(x) - Y_alpha(x) = (1/pi) sum_k Gamma(k+1/2) (x/2)^(alpha-2k-1) / Gamma(alpha+1/2-k).
inline AsymptoticValue struve_minus_y(double alpha, double x, int max_terms = 400) {
  const double h = 0.5 * x;
  double t = std::pow(h, alpha - 1.0) * rgamma(alpha + 0.5) / std::sqrt(std::numbers::pi);
  CompensatedSum sum;
  sum += t;
  double prev = std::fabs(t);
  AsymptoticValue r;
  for (int k = 0; k < max_terms; ++k) {
    const double next = t * (k + 0.5) * (alpha - 0.5 - k) / (h * h);
    if (next == 0.0) {
      prev = 0.0;
      break;
    }
    if (std::fabs(next) > prev) break;
    sum += next;
    prev = std::fabs(next);
    t = next;
    if (prev < 1e-17 * std::fabs(sum.value())) break;
  }
  r.value = sum.value();
  r.error = prev;
  return r;
}

/// H_alpha(x) for large x: Y_alpha plus the algebraic correction.
inline AsymptoticValue struve_h_asymptotic(double alpha, double x) {
  const AsymptoticValue y = cyl_y_asymptotic(alpha, x);
  const AsymptoticValue c = struve_minus_y(alpha, x);
  return {y.value + c.value, y.error + c.error};
}

/// Even and odd parts of the expansion pi A_nu(x) ~ sum_k e_k with
/// e_0 = 1/x, e_1 = -nu/x^2, e_{k+2} = e_k (nu^2 - (k+1)^2) / x^2.
/// A_nu + A_{-nu} = (2/pi) even, A_nu - A_{-nu} = (2/pi) odd.
struct AngerWeberTail {
  double even = 0.0;
  double odd = 0.0;
  double error = 0.0;
};

inline AngerWeberTail anger_weber_tail(double nu, double x, int max_terms = 400) {
  AngerWeberTail r;
  const double x2 = x * x;
  const double nu2 = nu * nu;
  for (int parity = 0; parity < 2; ++parity) {
    double t = parity == 0 ? 1.0 / x : -nu / x2;
    CompensatedSum sum;
    sum += t;
    double prev = std::fabs(t);
    for (int k = parity; k < 2 * max_terms && t != 0.0; k += 2) {
      const double next = t * (nu2 - (k + 1.0) * (k + 1.0)) / x2;
      if (next == 0.0) {
        prev = 0.0;
        break;
      }
      if (std::fabs(next) > prev) break;
      sum += next;
      prev = std::fabs(next);
      t = next;
      if (prev < 1e-17 * std::fabs(sum.value())) break;
    }
    (parity == 0 ? r.even : r.odd) = sum.value();
    r.error += prev;
  }
  return r;
}

/// S1(nu, x) for large x.
inline AsymptoticValue s1_asymptotic(double nu, double x) {
  const HankelPQ h = hankel_pq(nu, x);
  const double amp = std::sqrt(2.0 / (std::numbers::pi * x));
  const double osc = amp * (h.p * detail::cos_shift(x, 0.25) - h.q * detail::sin_shift(x, 0.25));
  const AngerWeberTail a = anger_weber_tail(nu, x);
  const double value = osc + detail::sinpi(0.5 * nu) * (2.0 / std::numbers::pi) * a.odd;
  return {value, amp * h.error + a.error};
}

/// S2(nu, x) for large x.
inline AsymptoticValue s2_asymptotic(double nu, double x) {
  const HankelPQ h = hankel_pq(nu, x);
  const double amp = std::sqrt(2.0 / (std::numbers::pi * x));
  const double osc = amp * (h.p * detail::sin_shift(x, 0.25) + h.q * detail::cos_shift(x, 0.25));
  const AngerWeberTail a = anger_weber_tail(nu, x);
  const double value = osc + detail::cospi(0.5 * nu) * (2.0 / std::numbers::pi) * a.even;
  return {value, amp * h.error + a.error};
}

}  // namespace umbra

#endif  // UMBRA_ASYMPTOTIC_HPP
