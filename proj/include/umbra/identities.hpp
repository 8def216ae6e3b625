#ifndef UMBRA_IDENTITIES_HPP
#define UMBRA_IDENTITIES_HPP

// Catalog of machine-checkable identities I01..I24. Each entry binds a left
// and a right evaluator, tagged with the modules they use, to a parameter
// window and a default grid.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "umbra/anger_weber.hpp"
#include "umbra/bessel.hpp"
#include "umbra/detail/identity_eval.hpp"
#include "umbra/error.hpp"
#include "umbra/gamma.hpp"
#include "umbra/humbert.hpp"
#include "umbra/policy.hpp"
#include "umbra/quadrature.hpp"
#include "umbra/struve.hpp"

namespace umbra {

class unknown_identity : public error {
 public:
  using error::error;
};

struct ParamSpec {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
  bool hi_open = false;
  bool integer = false;

  [[nodiscard]] bool contains(double v) const {
    if (!std::isfinite(v)) return false;
    if (lo_open ? !(v > lo) : !(v >= lo)) return false;
    if (hi_open ? !(v < hi) : !(v <= hi)) return false;
    return !integer || std::floor(v) == v;
  }

  [[nodiscard]] std::string describe() const {
    std::string s = name + (integer ? " integer in " : " in ");
    s += (lo_open ? "(" : "[") + format_number(lo) + ", " + format_number(hi) + (hi_open ? ")" : "]");
    return s;
  }

  static std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
  }
};

/// Named parameter values in declaration order.
struct ParamPoint {
  std::vector<std::pair<std::string, double>> values;

  [[nodiscard]] double operator[](const std::string& name) const {
    for (const auto& [k, v] : values)
      if (k == name) return v;
    throw domain_error("missing parameter '" + name + "'");
  }
};

struct Evaluator {
  std::function<double(const ParamPoint&, const EvalPolicy&)> fn;
  std::set<std::string> tags;  // modules above the gamma kernel that the binding uses
};

struct SourceRef {
  std::string location;
  std::string quote;
};

struct Identity {
  std::string id;
  std::string description;
  SourceRef reference;
  std::vector<ParamSpec> params;
  std::vector<ParamPoint> grid;
  Evaluator lhs;
  Evaluator rhs;
  double tol_abs = 0.0;
  double tol_rel = 0.0;
  std::string window_note;
  std::function<bool(const ParamPoint&)> constraint;  // extra window condition
  std::string constraint_note;
  bool jitter_ok = false;

  /// Throws domain_error unless p names exactly the declared parameters, each inside its window.
  void check_point(const ParamPoint& p) const {
    if (p.values.size() != params.size())
      throw domain_error(id + ": expected " + std::to_string(params.size()) + " parameters, got " +
                         std::to_string(p.values.size()));
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (p.values[i].first != params[i].name)
        throw domain_error(id + ": parameter '" + p.values[i].first + "' where '" + params[i].name + "' expected");
      if (!params[i].contains(p.values[i].second))
        throw domain_error(id + ": " + params[i].name + " = " + ParamSpec::format_number(p.values[i].second) +
                           " outside the window " + params[i].describe());
    }
    if (constraint && !constraint(p)) throw domain_error(id + ": point violates the window condition " + constraint_note);
  }
};

enum class VerifyStatus { pass, fail, skipped };

inline const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::pass: return "pass";
    case VerifyStatus::fail: return "fail";
    case VerifyStatus::skipped: return "skipped";
  }
  return "?";
}

struct VerificationReport {
  std::string id;
  ParamPoint params;
  std::optional<double> lhs;
  std::optional<double> rhs;
  std::optional<double> abs_err;
  std::optional<double> rel_err;
  double tol_abs = 0.0;
  double tol_rel = 0.0;
  VerifyStatus status = VerifyStatus::skipped;
  double seconds = 0.0;
  std::string reason;  // set when skipped
};

struct VerifyOptions {
  bool timing = true;
  bool jitter = false;
  std::uint64_t seed = 0;
};

namespace detail {

inline ParamPoint point(std::initializer_list<std::pair<std::string, double>> v) { return ParamPoint{v}; }

inline ParamSpec closed_range(std::string n, double lo, double hi) { return {std::move(n), lo, hi, false, false, false}; }
inline ParamSpec open_range(std::string n, double lo, double hi) { return {std::move(n), lo, hi, true, true, false}; }
inline ParamSpec int_range(std::string n, double lo, double hi) { return {std::move(n), lo, hi, false, false, true}; }

inline double rsqrt_pi() { return 1.0 / std::sqrt(std::numbers::pi); }

// Cartesian product of value lists, first name varying slowest.
inline std::vector<ParamPoint> product(const std::vector<std::pair<std::string, std::vector<double>>>& axes) {
  std::vector<ParamPoint> out{ParamPoint{}};
  for (const auto& [name, vals] : axes) {
    std::vector<ParamPoint> next;
    for (const auto& p : out)
      for (double v : vals) {
        ParamPoint q = p;
        q.values.emplace_back(name, v);
        next.push_back(q);
      }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Identity> build_catalog() {
  using std::numbers::pi;
  std::vector<Identity> c;

  {
    Identity I;
    I.id = "I01";
    I.description = "int_R j_0(x) dx = pi";
    I.reference = {"section 1", "the evaluation of a Gaussian integral"};
    I.grid = {ParamPoint{}};
    I.lhs = {[](const ParamPoint&, const EvalPolicy&) { return sph_j_line_integral(0, true); },
             {"sph_j", "oscillatory_quadrature"}};
    I.rhs = {[](const ParamPoint&, const EvalPolicy&) { return pi; }, {}};
    I.tol_abs = 1e-8;
    I.tol_rel = 1e-8;
    I.window_note = "no parameters";
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I02";
    I.description = "sum_n t^n/n! j_n(x) = j_0(sqrt(x^2 - 2xt)), truncated at n = 24";
    I.reference = {"section 2", "derivation of the relevant generating function"};
    I.params = {closed_range("t", -1.0, 1.0), closed_range("x", 0.25, 10.0)};
    I.grid = product({{"t", {-0.75, -0.25, 0.25, 0.75}}, {"x", {0.5, 2.0, 5.0}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               const double t = p["t"];
               const double x = p["x"];
               CompensatedSum s;
               double w = 1.0;
               for (int n = 0; n < 25; ++n) {
                 s += w * sph_j(n, x, pol).value;
                 w *= t / (n + 1.0);
               }
               return s.value();
             },
             {"sph_j"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const double x = p["x"];
               return sinc_sqrt(x * x - 2.0 * x * p["t"]);
             },
             {"elementary"}};
    I.tol_abs = 1e-12;
    I.tol_rel = 1e-12;
    I.window_note = "|t| <= 1 keeps the 25-term truncation below 1e-20 for x <= 10";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I03";
    I.description = "j_n(x) = (-x)^n (x^-1 d/dx)^n j_0(x), derivative in y = x^2 by finite differences";
    I.reference = {"section 2", "we obtain the well-known property"};
    I.params = {int_range("n", 1, 2), closed_range("x", 0.25, 10.0)};
    I.grid = product({{"n", {1, 2}}, {"x", {0.5, 1.0, 2.0, 5.0}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               return sph_j(static_cast<int>(p["n"]), p["x"], pol).value;
             },
             {"sph_j"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               // x^-1 d/dx = 2 d/dy on functions of y = x^2.
               const int n = static_cast<int>(p["n"]);
               const double x = p["x"];
               const std::function<double(double)> g = [](double y) { return sinc_sqrt(y); };
               const double d = n == 1 ? fd1(g, x * x) : fd2(g, x * x);
               return std::pow(-x, n) * std::pow(2.0, n) * d;
             },
             {"finite_difference", "elementary"}};
    I.tol_abs = 1e-6;
    I.tol_rel = 1e-6;
    I.window_note = "first and second derivatives only (five-point stencils, h = 1e-3)";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I04";
    I.description = "d^n/dx^n j_0 = n! sum_k (-1)^(n+k) (2x)^-k / (k!(n-2k)!) j_(n-k)";
    I.reference = {"section 2", "closed form for the successive derivative"};
    I.params = {int_range("n", 1, 2), closed_range("x", 0.25, 10.0)};
    I.grid = product({{"n", {1, 2}}, {"x", {0.5, 1.0, 2.0, 5.0}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               return sph_j_deriv(static_cast<int>(p["n"]), p["x"], pol);
             },
             {"sph_j_deriv", "sph_j"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const std::function<double(double)> g = [](double x) { return std::sin(x) / x; };
               return static_cast<int>(p["n"]) == 1 ? fd1(g, p["x"]) : fd2(g, p["x"]);
             },
             {"finite_difference", "elementary"}};
    I.tol_abs = 1e-6;
    I.tol_rel = 1e-6;
    I.window_note = "first and second derivatives only (five-point stencils, h = 1e-3)";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I05";
    I.description = "b_n = int_R j_n: b_2m = sqrt(pi) Gamma(m+1/2)/m!, b_(2m+1) = 0";
    I.reference = {"section 2", "equating the coefficients of the same powers"};
    I.params = {int_range("n", 0, 7)};
    I.grid = product({{"n", {0, 1, 2, 3, 4, 5, 6, 7}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy&) { return sph_j_line_integral(static_cast<int>(p["n"]), false); },
             {"sph_j", "oscillatory_quadrature"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const int n = static_cast<int>(p["n"]);
               if (n % 2 != 0) return 0.0;
               return std::sqrt(pi) * gamma(0.5 * n + 0.5) * rgamma(0.5 * n + 1.0);
             },
             {}};
    I.tol_abs = 1e-12;
    I.tol_rel = 1e-12;
    I.window_note = "both half lines integrated separately so odd orders test the cancellation";
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I06";
    I.description = "b(t) = sum_k t^(2k)/(2k)! b_2k = pi I_0(t), b_2k by quadrature";
    I.reference = {"section 2", "the modified Bessel function of order 0"};
    I.params = {closed_range("t", 0.0, 2.0)};
    I.grid = product({{"t", {0.25, 0.5, 1.0, 2.0}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const double t = p["t"];
               CompensatedSum s;
               double w = 1.0;
               for (int k = 0; k <= 30; ++k) {
                 if (k > 0) w *= t * t / ((2.0 * k - 1.0) * (2.0 * k));
                 if (w * pi < 1e-17) break;
                 s += w * sph_j_line_integral(2 * k, true);
               }
               return s.value();
             },
             {"sph_j", "oscillatory_quadrature"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy& pol) { return pi * mod_i0(p["t"], pol); }, {"mod_i0"}};
    I.tol_abs = 1e-8;
    I.tol_rel = 1e-8;
    I.window_note = "t <= 2 keeps the number of quadrature coefficients below 15";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I07";
    I.description = "int_R j_0(sqrt(a x^2 + b x)) dx = (pi/sqrt a) I_0(b/(2 sqrt a))";
    I.reference = {"section 2", "an integral representation of the function"};
    I.params = {closed_range("a", 0.25, 4.0), closed_range("b", 0.0, 2.0)};
    I.grid = product({{"a", {0.5, 1.0, 2.0}}, {"b", {0.0, 0.5, 1.5}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy&) {
               // Completing the square, u = x + b/(2a); the integrand is even in u.
               const double a = p["a"];
               const double b = p["b"];
               const double shift = b * b / (4.0 * a);
               QuadraturePlan q = tight_plan(1e-12);
               q.domain = Domain::semi_infinite(0.0);
               q.strategy = Strategy::oscillatory(pi / std::sqrt(a), 10.0 * pi / std::sqrt(a));
               const Integrand f = [=](double u) { return sinc_sqrt(a * u * u - shift); };
               return 2.0 * integrate(f, q).value;
             },
             {"elementary", "oscillatory_quadrature"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               const double a = p["a"];
               return pi / std::sqrt(a) * mod_i0(p["b"] / (2.0 * std::sqrt(a)), pol);
             },
             {"mod_i0"}};
    I.tol_abs = 1e-8;
    I.tol_rel = 1e-8;
    I.window_note = "a > 0 so the integral converges; b bounded to keep the sinh region short";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I08";
    I.description = "d/dx H_a = (H_(a-1) - H_(a+1) + (x/2)^a/(sqrt(pi) Gamma(a+3/2)))/2";
    I.reference = {"section 3", "By using the differentiation formula"};
    I.params = {closed_range("alpha", 1.0, 3.0), closed_range("x", 0.25, 10.0)};
    I.grid = product({{"alpha", {1.0, 1.5, 1.7, 2.5}}, {"x", {0.5, 2.0, 5.0}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               const double a = p["alpha"];
               const std::function<double(double)> h = [&](double x) { return struve_h(a, x, pol).value; };
               return fd1(h, p["x"]);
             },
             {"struve_h", "finite_difference"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const double a = p["alpha"];
               const double x = p["x"];
               return 0.5 * (poisson_h(a - 1.0, x) - poisson_h(a + 1.0, x) + struve_source(a, x));
             },
             {"poisson_integral", "adaptive_quadrature"}};
    I.tol_abs = 1e-6;
    I.tol_rel = 1e-6;
    I.window_note = "alpha >= 1 so that H_(alpha-1) has a Poisson integral";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I09";
    I.description = "H_(a-1) + H_(a+1) = (2a/x) H_a + (x/2)^a/(sqrt(pi) Gamma(a+3/2))";
    I.reference = {"section 3", "the recursion formula for the Struve functions"};
    I.params = {closed_range("alpha", 0.5, 3.0), closed_range("x", 0.25, 10.0)};
    I.grid = product({{"alpha", {0.5, 1.0, 1.7}}, {"x", {0.5, 1.0, 2.0, 5.0, 10.0}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               const double a = p["alpha"];
               const double x = p["x"];
               return struve_h(a - 1.0, x, pol).value + struve_h(a + 1.0, x, pol).value;
             },
             {"struve_h"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const double a = p["alpha"];
               const double x = p["x"];
               return 2.0 * a / x * poisson_h(a, x) + struve_source(a, x);
             },
             {"poisson_integral", "adaptive_quadrature"}};
    I.tol_abs = 1e-6;
    I.tol_rel = 1e-6;
    I.window_note = "alpha > -1/2 for the Poisson integral of H_alpha";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I10";
    I.description = "x^2 H_a'' + x H_a' + (x^2 - a^2) H_a = 4 (x/2)^(a+1)/(sqrt(pi) Gamma(a+1/2))";
    I.reference = {"section 3", "non-homogeneous Bessel equation"};
    I.params = {closed_range("alpha", 0.0, 3.0), closed_range("x", 0.25, 10.0)};
    I.grid = product({{"alpha", {0.0, 0.5, 1.0, 1.7}}, {"x", {0.5, 1.0, 2.0, 5.0}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               const double a = p["alpha"];
               const double x = p["x"];
               const std::function<double(double)> h = [&](double u) { return struve_h(a, u, pol).value; };
               return x * x * fd2(h, x) + x * fd1(h, x) + (x * x - a * a) * h(x);
             },
             {"struve_h", "finite_difference"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const double a = p["alpha"];
               return 4.0 * std::pow(0.5 * p["x"], a + 1.0) * rsqrt_pi() * rgamma(a + 0.5);
             },
             {"elementary"}};
    I.tol_abs = 1e-6;
    I.tol_rel = 1e-6;
    I.window_note = "x >= 0.25 keeps the stencil away from the origin";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I11";
    I.description = "H_a(x) = (x/2)^(a+1) int_0^inf e^-s J_(1/2, a+1/2)(s (x/2)^2) ds";
    I.reference = {"section 3", "connection with the Struve functions is realized"};
    I.params = {closed_range("alpha", 0.0, 2.0), closed_range("x", 0.25, 5.0)};
    I.grid = product({{"alpha", {0.0, 0.5, 1.0, 1.5}}, {"x", {0.5, 1.0, 2.0, 5.0}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) { return struve_h(p["alpha"], p["x"], pol).value; },
             {"struve_h"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               const double a = p["alpha"];
               const double h = 0.5 * p["x"];
               const Integrand f = [&](double s) { return humbert2(0.5, a + 0.5, s * h * h, pol).value; };
               return std::pow(h, a + 1.0) * integrate_laguerre(f, 0.0, 128).value;
             },
             {"humbert2", "laguerre_quadrature"}};
    I.tol_abs = 1e-8;
    I.tol_rel = 1e-8;
    I.window_note = "x <= 5 keeps the Laguerre integrand resolved by 128 nodes";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I12";
    I.description = "int_R J_(mu,nu)(x^2) dx = sqrt(pi)/(Gamma(mu+1/2) Gamma(nu+1/2)), Abel-regularized";
    I.reference = {"section 3", "the identities reported below"};
    I.params = {closed_range("mu", 2.0, 3.5), closed_range("nu", 2.0, 3.5)};
    I.grid = {point({{"mu", 2.0}, {"nu", 2.0}}), point({{"mu", 2.5}, {"nu", 2.5}}), point({{"mu", 3.0}, {"nu", 3.0}}),
              point({{"mu", 2.0}, {"nu", 3.5}})};
    I.lhs = {[](const ParamPoint& p, const EvalPolicy&) { return abel_mellin(0.5, p["mu"], p["nu"]); },
             {"hyper_series", "abel_regularization"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               return std::sqrt(pi) * rgamma(p["mu"] + 0.5) * rgamma(p["nu"] + 0.5);
             },
             {}};
    I.tol_abs = 1e-8;
    I.tol_rel = 1e-8;
    I.window_note =
        "the integral is not absolutely convergent; it is evaluated as the Abel limit of exp(-x^2/X) damping, "
        "which settles to 1e-8 only for mu, nu >= 2";
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I13";
    I.description = "int_0^inf x^(a-1) J_(mu,nu)(x) dx = Gamma(a)/(Gamma(mu-a+1) Gamma(nu-a+1)), Abel-regularized";
    I.reference = {"section 3", "the identities reported below"};
    I.params = {open_range("alpha", 0.0, 1.0), closed_range("mu", 0.0, 2.0), closed_range("nu", 0.0, 2.0)};
    I.grid = {point({{"alpha", 0.25}, {"mu", 1.5}, {"nu", 1.5}}), point({{"alpha", 0.5}, {"mu", 2.0}, {"nu", 2.0}}),
              point({{"alpha", 0.75}, {"mu", 2.0}, {"nu", 2.0}}), point({{"alpha", 0.25}, {"mu", 2.0}, {"nu", 1.0}}),
              point({{"alpha", 0.5}, {"mu", 2.0}, {"nu", 1.5}})};
    I.lhs = {[](const ParamPoint& p, const EvalPolicy&) { return abel_mellin(p["alpha"], p["mu"], p["nu"]); },
             {"hyper_series", "abel_regularization"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const double a = p["alpha"];
               return gamma(a) * rgamma(p["mu"] - a + 1.0) * rgamma(p["nu"] - a + 1.0);
             },
             {}};
    I.tol_abs = 1e-6;
    I.tol_rel = 1e-6;
    I.window_note = "alpha in (0,1), mu, nu in [0,2], restricted to mu + nu - 3 alpha >= 1.5 where the Abel limit settles";
    I.constraint = [](const ParamPoint& p) { return p["mu"] + p["nu"] - 3.0 * p["alpha"] >= 1.5; };
    I.constraint_note = "mu + nu - 3 alpha >= 1.5";
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I14";
    I.description = "int_0^inf H_a(x) dx = -cot(a pi/2), -2 < a < 0";
    I.reference = {"section 3", "allows one also to easily prove"};
    I.params = {open_range("alpha", -2.0, 0.0)};
    I.grid = product({{"alpha", {-1.5, -1.25, -1.0, -0.75, -0.5}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy&) { return struve_integral(p["alpha"]).value; },
             {"struve_h", "split_tail_quadrature"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const double a = p["alpha"];
               return -cospi(0.5 * a) / sinpi(0.5 * a);
             },
             {"elementary"}};
    I.tol_abs = 1e-6;
    I.tol_rel = 1e-6;
    I.window_note = "-2 < alpha < 0 as stated with the identity";
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I15";
    I.description = "int_0^inf s^(g-1) e^-s J_(a,b)(s x^2/4) ds = Gamma(g)/(Gamma(1+a) Gamma(1+b)) 1F2(g; 1+a, 1+b; -x^2/4)";
    I.reference = {"section 3", "the following auxiliary function"};
    I.params = {closed_range("alpha", 0.0, 2.0), closed_range("beta", 0.0, 2.0), {"gamma", 0.0, 2.0, true, false, false},
                closed_range("x", 0.25, 5.0)};
    I.grid = product({{"alpha", {0.0, 0.5, 1.0}}, {"beta", {0.0, 0.5, 1.0}}, {"gamma", {0.5, 1.0}},
                      {"x", {0.5, 1.0, 2.0, 5.0}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               const double a = p["alpha"];
               const double b = p["beta"];
               const double z = 0.25 * p["x"] * p["x"];
               const Integrand f = [&](double s) { return humbert2(a, b, s * z, pol).value; };
               return integrate_laguerre(f, p["gamma"] - 1.0, 128).value;
             },
             {"humbert2", "laguerre_quadrature"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               const double a = p["alpha"];
               const double b = p["beta"];
               const double g = p["gamma"];
               const double x = p["x"];
               return gamma(g) * rgamma(1.0 + a) * rgamma(1.0 + b) * hyp1f2(g, 1.0 + a, 1.0 + b, -0.25 * x * x, pol).value;
             },
             {"hyp1f2"}};
    I.tol_abs = 1e-9;
    I.tol_rel = 1e-9;
    I.window_note = "gamma > 0 for convergence at s = 0; x <= 5 keeps the Laguerre rule resolved";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I16";
    I.description = "sum_(m,n in Z) u^m v^n J_(m,n)(x) = exp(u + v - x/(uv)), |m|,|n| <= 14";
    I.reference = {"section 3", "it is also easy to show that"};
    I.params = {closed_range("u", 0.5, 1.5), closed_range("v", 0.5, 1.5), closed_range("x", 0.05, 1.0)};
    I.grid = {point({{"u", 1.0}, {"v", 1.0}, {"x", 0.5}}), point({{"u", 0.8}, {"v", 1.2}, {"x", 0.6}}),
              point({{"u", 0.5}, {"v", 0.5}, {"x", 0.1}}), point({{"u", 1.0}, {"v", 0.6}, {"x", 0.3}})};
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) { return humbert_generating_sum(p["u"], p["v"], p["x"], 14, pol); },
             {"humbert2"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const double u = p["u"];
               const double v = p["v"];
               return std::exp(u + v - p["x"] / (u * v));
             },
             {"elementary"}};
    I.tol_abs = 1e-10;
    I.tol_rel = 1e-10;
    I.window_note = "u, v near 1 and x <= 1 so that |m|,|n| <= 14 reaches the truncation floor";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I17";
    I.description = "sum_(m,n in Z) u^m v^n Delta_(m,n,g)(x) = e^(u+v) Gamma(g) / (1 + (x/2)^2/(uv))^g, |m|,|n| <= 14";
    I.reference = {"section 3", "generating function of $\\Delta_{\\alpha, \\beta, \\gamma}$"};
    I.params = {{"gamma", 0.0, 3.0, true, false, false}, closed_range("u", 0.5, 1.5), closed_range("v", 0.5, 1.5),
                closed_range("x", 0.05, 1.0)};
    I.grid = {point({{"gamma", 1.0}, {"u", 1.0}, {"v", 1.0}, {"x", 0.5}}),
              point({{"gamma", 1.0}, {"u", 0.8}, {"v", 1.2}, {"x", 0.6}}),
              point({{"gamma", 2.0}, {"u", 1.0}, {"v", 1.0}, {"x", 0.5}}),
              point({{"gamma", 2.0}, {"u", 0.8}, {"v", 1.2}, {"x", 0.6}}),
              point({{"gamma", 0.5}, {"u", 1.0}, {"v", 1.0}, {"x", 0.5}})};
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               return delta_generating_sum(p["gamma"], p["u"], p["v"], p["x"], 14, pol);
             },
             {"delta_fn"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const double u = p["u"];
               const double v = p["v"];
               const double h = 0.5 * p["x"];
               const double g = p["gamma"];
               return std::exp(u + v) * gamma(g) * std::pow(1.0 + h * h / (u * v), -g);
             },
             {"elementary"}};
    I.tol_abs = 1e-10;
    I.tol_rel = 1e-10;
    I.window_note = "(x/2)^2 < |uv| for the binomial expansion";
    I.constraint = [](const ParamPoint& p) {
      const double h = 0.5 * p["x"];
      return h * h < std::fabs(p["u"] * p["v"]);
    };
    I.constraint_note = "(x/2)^2 < |uv|";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I18";
    I.description = "J_mu(x) J_nu(x) = (x/2)^(mu+nu) int_0^inf e^-s s^(mu+nu) J_(mu,nu,mu+nu)(s^2 x^2/4) ds";
    I.reference = {"section 3", "the product of two cylindrical Bessel functions"};
    I.params = {closed_range("mu", 0.0, 2.0), closed_range("nu", 0.0, 2.0), closed_range("x", 0.25, 3.0)};
    I.grid = product({{"mu", {0.0}}, {"nu", {0.0}}, {"x", {0.5, 1.0, 3.0}}});
    for (const auto& q : product({{"mu", {0.5}}, {"nu", {0.5}}, {"x", {0.5, 1.0, 3.0}}})) I.grid.push_back(q);
    for (const auto& q : product({{"mu", {1.0}}, {"nu", {2.0}}, {"x", {0.5, 1.0, 3.0}}})) I.grid.push_back(q);
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               const double x = p["x"];
               return cyl_j(p["mu"], x, pol).value * cyl_j(p["nu"], x, pol).value;
             },
             {"cyl_j"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               const double mu = p["mu"];
               const double nu = p["nu"];
               const double h = 0.5 * p["x"];
               const Integrand f = [&](double s) { return humbert3(mu, nu, mu + nu, s * s * h * h, pol).value; };
               return std::pow(h, mu + nu) * integrate_laguerre(f, mu + nu, 128).value;
             },
             {"humbert3", "laguerre_quadrature"}};
    I.tol_abs = 1e-8;
    I.tol_rel = 1e-8;
    I.window_note = "x <= 3 keeps the Laguerre integrand resolved by 128 nodes";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I19";
    I.description =
        "int_0^inf (x/2)^(-mu-nu) J_mu J_nu dx = sqrt(pi) Gamma(mu+nu)/(Gamma(mu+1/2) Gamma(nu+1/2) Gamma(mu+nu+1/2))";
    I.reference = {"section 3", "to prove, for example, the following identity"};
    I.params = {closed_range("mu", 0.0, 2.0), closed_range("nu", 0.0, 2.0)};
    I.grid = {point({{"mu", 0.5}, {"nu", 0.5}}), point({{"mu", 0.25}, {"nu", 0.5}}), point({{"mu", 1.0}, {"nu", 1.0}}),
              point({{"mu", 1.0}, {"nu", 0.5}}), point({{"mu", 1.5}, {"nu", 1.0}})};
    I.lhs = {[](const ParamPoint& p, const EvalPolicy&) { return bessel_product_integral(p["mu"], p["nu"]).value; },
             {"cyl_j", "split_tail_quadrature"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const double mu = p["mu"];
               const double nu = p["nu"];
               return std::sqrt(pi) * gamma(mu + nu) * rgamma(mu + 0.5) * rgamma(nu + 0.5) * rgamma(mu + nu + 0.5);
             },
             {}};
    I.tol_abs = 1e-6;
    I.tol_rel = 1e-6;
    I.window_note = "mu + nu in (0.5, 3): convergent at infinity and inside the tested range";
    I.constraint = [](const ParamPoint& p) {
      const double s = p["mu"] + p["nu"];
      return s > 0.5 && s < 3.0;
    };
    I.constraint_note = "0.5 < mu + nu < 3";
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I20";
    I.description = "Anger (kind 0) and Weber (kind 1) functions from S1, S2 equal their integrals over [0, pi]";
    I.reference = {"section 4", "the Anger $\\mathbf{J}_\\nu (x)$ and Weber"};
    I.params = {int_range("kind", 0, 1), closed_range("nu", -4.0, 4.0), closed_range("x", 0.25, 10.0)};
    I.grid = product({{"kind", {0}}, {"nu", {0.0, 1.0, 2.0, 3.0, 0.5, 1.3}}, {"x", {0.5, 2.0, 8.0}}});
    for (const auto& q : product({{"kind", {1}}, {"nu", {0.0, 0.5, 1.3}}, {"x", {0.5, 2.0, 8.0}}})) I.grid.push_back(q);
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               return p["kind"] == 0.0 ? anger(p["nu"], p["x"], pol) : weber(p["nu"], p["x"], pol);
             },
             {"s_functions"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               return anger_weber_integral(p["nu"], p["x"], p["kind"] != 0.0);
             },
             {"adaptive_quadrature", "elementary"}};
    I.tol_abs = 1e-10;
    I.tol_rel = 1e-10;
    I.window_note = "|nu| <= 4 and x <= 10, well inside the S-series range";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I21";
    I.description = "int_0^inf S1(nu, x) dx = cos(nu pi/2)";
    I.reference = {"section 4", "used to easily prove, for example"};
    I.params = {closed_range("nu", -1.5, 1.5)};
    I.grid = product({{"nu", {0.0, 0.5, -0.5, 1.0, 1.5}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy&) { return s1_integral(p["nu"]).value; },
             {"s_functions", "split_tail_quadrature"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) { return cospi(0.5 * p["nu"]); }, {"elementary"}};
    I.tol_abs = 1e-6;
    I.tol_rel = 1e-6;
    I.window_note = "|nu| <= 1.5, where the accelerated tail integral converges";
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I22";
    I.description = "int_0^inf S2(nu, x)/x dx = sin(nu pi/2)/nu";
    I.reference = {"section 4", "used to easily prove, for example"};
    I.params = {closed_range("nu", -1.5, 1.5)};
    I.grid = product({{"nu", {0.5, 1.0, 1.5, -0.5, -1.0}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy&) { return s2_over_x_integral(p["nu"]).value; },
             {"s_functions", "split_tail_quadrature"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const double nu = p["nu"];
               return sinpi(0.5 * nu) / nu;
             },
             {"elementary"}};
    I.tol_abs = 1e-6;
    I.tol_rel = 1e-6;
    I.window_note = "0 < |nu| <= 1.5";
    I.constraint = [](const ParamPoint& p) { return p["nu"] != 0.0; };
    I.constraint_note = "nu != 0";
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I23";
    I.description = "x^2 j_n'' + 2x j_n' + (x^2 - n(n+1)) j_n = 0, residual against the trigonometric form";
    I.reference = {"section 1", "after a few manipulations, we end up"};
    I.params = {int_range("n", 0, 10), closed_range("x", 0.25, 10.0)};
    I.grid = product({{"n", {0, 1, 2, 3, 4, 5}}, {"x", {0.5, 1.0, 2.0, 5.0}}});
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               const int n = static_cast<int>(p["n"]);
               const double x = p["x"];
               const std::function<double(double)> j = [&](double u) { return sph_j(n, u, pol).value; };
               return x * x * fd2(j, x) + 2.0 * x * fd1(j, x);
             },
             {"sph_j", "finite_difference"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const int n = static_cast<int>(p["n"]);
               const double x = p["x"];
               return -(x * x - n * (n + 1.0)) * rayleigh_jn(n, x);
             },
             {"rayleigh"}};
    I.tol_abs = 1e-6;
    I.tol_rel = 1e-6;
    I.window_note = "x >= 0.25 keeps the stencil away from the origin";
    I.jitter_ok = true;
    c.push_back(I);
  }
  {
    Identity I;
    I.id = "I24";
    I.description =
        "(nu/x -+ d/dx) J_nu = J_(nu+-1) (kind 0); (a/x - d/dx) H_a = H_(a+1) - (x/2)^a/(sqrt(pi) Gamma(a+3/2)), "
        "(a/x + d/dx) H_a = H_(a-1) (kind 1)";
    I.reference = {"section 1", "we obtain the following identity"};
    I.params = {int_range("kind", 0, 1), closed_range("order", 1.0, 4.0), closed_range("x", 0.25, 10.0),
                int_range("sign", -1, 1)};
    I.grid = product({{"kind", {0}}, {"order", {1.3, 1.5, 2.5, 3.5}}, {"x", {0.5, 2.0, 5.0}}, {"sign", {1, -1}}});
    for (const auto& q : product({{"kind", {1}}, {"order", {1.0, 1.5, 2.0}}, {"x", {0.5, 2.0, 5.0}}, {"sign", {1, -1}}}))
      I.grid.push_back(q);
    I.lhs = {[](const ParamPoint& p, const EvalPolicy& pol) {
               const double v = p["order"];
               const double x = p["x"];
               const double s = p["sign"];
               const bool struve = p["kind"] != 0.0;
               const std::function<double(double)> f = [&](double u) {
                 return struve ? struve_h(v, u, pol).value : cyl_j(v, u, pol).value;
               };
               return v / x * f(x) - s * fd1(f, x);
             },
             {"cyl_j", "struve_h", "finite_difference"}};
    I.rhs = {[](const ParamPoint& p, const EvalPolicy&) {
               const double v = p["order"];
               const double x = p["x"];
               const double s = p["sign"];
               if (p["kind"] == 0.0) return poisson_j(v + s, x);
               return s > 0 ? poisson_h(v + 1.0, x) - struve_source(v, x) : poisson_h(v - 1.0, x);
             },
             {"poisson_integral", "adaptive_quadrature"}};
    I.tol_abs = 1e-6;
    I.tol_rel = 1e-6;
    I.window_note = "order >= 1 so the lowered function has a Poisson integral";
    I.constraint = [](const ParamPoint& p) { return p["sign"] != 0.0; };
    I.constraint_note = "sign = +1 or -1";
    I.jitter_ok = true;
    c.push_back(I);
  }
  return c;
}

}  // namespace detail

/// The fixed catalog, ordered by id.
inline const std::vector<Identity>& list_identities() {
  static const std::vector<Identity> catalog = detail::build_catalog();
  return catalog;
}

inline const Identity& find_identity(const std::string& id) {
  for (const auto& i : list_identities())
    if (i.id == id) return i;
  throw unknown_identity("unknown identity '" + id + "'");
}

namespace detail {

inline VerificationReport evaluate_point(const Identity& I, const ParamPoint& p, const EvalPolicy& policy,
                                         bool timing) {
  VerificationReport r;
  r.id = I.id;
  r.params = p;
  r.tol_abs = I.tol_abs;
  r.tol_rel = I.tol_rel;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const double l = I.lhs.fn(p, policy);
    const double h = I.rhs.fn(p, policy);
    if (!std::isfinite(l) || !std::isfinite(h)) throw convergence_error("non-finite evaluator result");
    r.lhs = l;
    r.rhs = h;
    const double a = std::fabs(l - h);
    const double scale = std::max(std::fabs(l), std::fabs(h));
    r.abs_err = a;
    r.rel_err = scale == 0.0 ? 0.0 : a / scale;
    r.status = (a <= I.tol_abs || *r.rel_err <= I.tol_rel) ? VerifyStatus::pass : VerifyStatus::fail;
  } catch (const error& e) {
    r.status = VerifyStatus::skipped;
    r.reason = e.what();
  }
  if (timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Relative perturbation of up to 1% on the continuous parameters; points that
// would leave the window keep their original value.
inline ParamPoint jitter_point(const Identity& I, const ParamPoint& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.01, 0.01);
  ParamPoint q = p;
  for (std::size_t i = 0; i < I.params.size(); ++i) {
    const double d = u(rng);
    if (I.params[i].integer) continue;
    double& v = q.values[i].second;
    const double moved = v == 0.0 ? d : v * (1.0 + d);
    const double old = v;
    v = moved;
    if (!I.params[i].contains(v) || (I.constraint && !I.constraint(q))) v = old;
  }
  return q;
}

}  // namespace detail

/// Evaluates one identity at one parameter point. Unknown ids raise
/// unknown_identity, points outside the window domain_error; evaluator
/// failures become skipped reports.
inline VerificationReport verify(const std::string& id, const std::map<std::string, double>& params,
                                 const EvalPolicy& policy = {}, bool timing = true) {
  const Identity& I = find_identity(id);
  policy.validate();
  ParamPoint p;
  for (const auto& spec : I.params) {
    const auto it = params.find(spec.name);
    if (it == params.end()) throw domain_error(id + ": missing parameter '" + spec.name + "'");
    p.values.emplace_back(spec.name, it->second);
  }
  for (const auto& [k, v] : params) {
    const bool known = std::any_of(I.params.begin(), I.params.end(), [&](const ParamSpec& s) { return s.name == k; });
    if (!known) throw domain_error(id + ": unknown parameter '" + k + "'");
  }
  I.check_point(p);
  return detail::evaluate_point(I, p, policy, timing);
}

/// Runs the default grids of the given identities; reports are ordered by
/// (catalog order, grid index) whatever the degree of parallelism.
inline std::vector<VerificationReport> verify_many(const std::vector<std::string>& ids, const EvalPolicy& policy = {},
                                                   int parallelism = 1, const VerifyOptions& options = {}) {
  if (parallelism < 1) throw domain_error("verify: parallelism must be at least 1");
  policy.validate();
  std::vector<const Identity*> selected;
  for (const auto& id : ids) selected.push_back(&find_identity(id));

  struct Task {
    const Identity* identity;
    ParamPoint point;
  };
  std::vector<Task> tasks;
  std::mt19937_64 rng(options.seed);
  for (const Identity* I : selected)
    for (const auto& p : I->grid)
      tasks.push_back({I, (options.jitter && I->jitter_ok) ? detail::jitter_point(*I, p, rng) : p});

  std::vector<VerificationReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++)
      out[i] = detail::evaluate_point(*tasks[i].identity, tasks[i].point, policy, options.timing);
  };
  const int n = std::min<int>(parallelism, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

inline std::vector<VerificationReport> verify_all(const EvalPolicy& policy = {}, int parallelism = 1,
                                                  const VerifyOptions& options = {}) {
  std::vector<std::string> ids;
  for (const auto& I : list_identities()) ids.push_back(I.id);
  return verify_many(ids, policy, parallelism, options);
}

}  // namespace umbra

#endif  // UMBRA_IDENTITIES_HPP
