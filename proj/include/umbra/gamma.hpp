#ifndef UMBRA_GAMMA_HPP
#define UMBRA_GAMMA_HPP

// Gamma-function family and two-variable Hermite polynomials.

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "umbra/detail/trig.hpp"
#include "umbra/error.hpp"

namespace umbra {

/// Largest argument for which Gamma(x) is finite in binary64.
inline constexpr double gamma_overflow_x = 171.62437695630272;

/// Gamma(x). Throws domain_error at the poles (nonpositive integers) and
/// overflow_error when the result exceeds the binary64 range.
inline double gamma(double x) {
  if (std::isnan(x)) throw domain_error("gamma: NaN argument");
  if (detail::is_nonpositive_integer(x))
    throw domain_error("gamma: pole at nonpositive integer " + std::to_string(x));
  if (x > gamma_overflow_x) throw overflow_error("gamma: overflow for x = " + std::to_string(x));
  const double g = std::tgamma(x);
  if (std::isinf(g)) throw overflow_error("gamma: overflow for x = " + std::to_string(x));
  return g;
}

/// 1/Gamma(x), an entire function. Exactly zero at nonpositive integers so
/// that series terms with a pole in the denominator vanish.
inline double rgamma(double x) {
  if (std::isnan(x)) return x;
  if (detail::is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) {
    if (x > gamma_overflow_x) return std::exp(-std::lgamma(x));
    return 1.0 / std::tgamma(x);
  }
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi.
  const double s = detail::sinpi(x);
  const double y = 1.0 - x;
  if (y <= gamma_overflow_x) return s * std::tgamma(y) / std::numbers::pi;
  const double mag = std::exp(std::lgamma(y) + std::log(std::fabs(s)) - std::log(std::numbers::pi));
  return s < 0 ? -mag : mag;
}

/// Gamma evaluated at one argument together with its reciprocal.
struct GammaValue {
  double argument = 0.0;
  double value = 0.0;       // +inf at a pole
  double reciprocal = 0.0;  // exactly 0 at a pole
  bool is_pole = false;

  static GammaValue at(double x) {
    GammaValue g;
    g.argument = x;
    g.is_pole = detail::is_nonpositive_integer(x);
    g.reciprocal = rgamma(x);
    if (g.is_pole) {
      g.value = std::numeric_limits<double>::infinity();
    } else {
      g.value = x > gamma_overflow_x ? std::numeric_limits<double>::infinity() : std::tgamma(x);
    }
    return g;
  }
};

inline constexpr int hermite2_max_degree = 200;

/// Coefficients n!/(k!(n-2k)!) of the two-variable Hermite polynomial
/// H_n(y, z) = sum_k c_k y^(n-2k) z^k.
struct Hermite2Coeffs {
  int degree = 0;
  std::vector<double> coeffs;

  explicit Hermite2Coeffs(int n) : degree(n) {
    if (n < 0 || n > hermite2_max_degree)
      throw domain_error("hermite2: degree must lie in [0, 200], got " + std::to_string(n));
    coeffs.resize(static_cast<std::size_t>(n / 2 + 1));
    double c = 1.0;
    for (int k = 0; k <= n / 2; ++k) {
      coeffs[static_cast<std::size_t>(k)] = c;
      c *= static_cast<double>(n - 2 * k) * static_cast<double>(n - 2 * k - 1) / static_cast<double>(k + 1);
    }
  }

  // Terms reach |y|^n while the sum can be many orders smaller (z < 0), so
  // coefficients, powers and the compensated sum run in long double.
  [[nodiscard]] double operator()(double y, double z) const {
    long double c = 1.0L;
    long double sum = 0.0L;
    long double comp = 0.0L;
    for (int k = 0; k <= degree / 2; ++k) {
      const long double term = c * std::pow(static_cast<long double>(y), degree - 2 * k) *
                               std::pow(static_cast<long double>(z), k);
      const long double t = sum + term;
      comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
      sum = t;
      c *= static_cast<long double>(degree - 2 * k) * static_cast<long double>(degree - 2 * k - 1) / (k + 1);
    }
    return static_cast<double>(sum + comp);
  }
};

/// Two-variable Hermite polynomial H_n(y, z) = n! sum_k y^(n-2k) z^k / (k!(n-2k)!).
inline double hermite2(int n, double y, double z) { return Hermite2Coeffs(n)(y, z); }

}  // namespace umbra

#endif  // UMBRA_GAMMA_HPP
