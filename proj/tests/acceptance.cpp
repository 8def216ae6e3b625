// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "umbra/umbra.hpp"

using namespace umbra;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

double rel(double got, double want) {
  if (got == want) return 0.0;
  return std::fabs(got - want) / std::max(std::fabs(got), std::fabs(want));
}

VerificationReport at(const std::string& id, const std::map<std::string, double>& p) { return verify(id, p); }

Outcome c01() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = at("I01", {});
  const double t = seconds_since(t0);
  const double e = r.lhs ? std::fabs(*r.lhs - pi) : INFINITY;
  return {e <= 1e-8 && t < 5.0, fmt("|lhs - pi| = %.2e, %.2f s", e, t)};
}

Outcome c02() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<double, double>> cases = {{-1.5, -1.0}, {-1.0, 0.0}, {-0.5, 1.0}};
  double worst = 0.0;
  for (const auto& [a, want] : cases) {
    const auto r = at("I14", {{"alpha", a}});
    worst = std::max(worst, r.lhs ? std::fabs(*r.lhs - want) : INFINITY);
  }
  const double t = seconds_since(t0);
  return {worst <= 1e-6 && t < 60.0, fmt("max |lhs - {-1,0,1}| = %.2e, %.2f s", worst, t)};
}

Outcome c03() {
  const auto base = at("I19", {{"mu", 0.5}, {"nu", 0.5}});
  const double e0 = base.lhs ? rel(*base.lhs, 2.0) : INFINITY;
  double worst = 0.0;
  int others = 0;
  for (const auto& p : find_identity("I19").grid) {
    if (p["mu"] == 0.5 && p["nu"] == 0.5) continue;
    const auto r = at("I19", {{"mu", p["mu"]}, {"nu", p["nu"]}});
    worst = std::max(worst, r.rel_err.value_or(INFINITY));
    ++others;
  }
  return {e0 <= 1e-6 && worst <= 1e-6 && others >= 4,
          fmt("rel err at (1/2,1/2) %.2e; max over 4 more points %.2e", e0, worst)};
}

Outcome c04() {
  double worst = 0.0;
  int n = 0;
  for (double t : {-0.75, -0.25, 0.25, 0.75})
    for (double x : {0.5, 2.0, 5.0}) {
      const auto r = at("I02", {{"t", t}, {"x", x}});
      worst = std::max(worst, r.abs_err.value_or(INFINITY));
      ++n;
    }
  return {worst <= 1e-12 && n == 12, fmt("max defect %.2e over 12 points", worst)};
}

Outcome c05() {
  double even = 0.0, odd = 0.0, coeff = 0.0;
  for (int n = 0; n <= 3; ++n) {
    const double want = std::sqrt(pi) * umbra::gamma(n + 0.5) * rgamma(n + 1.0);
    even = std::max(even, rel(detail::sph_j_line_integral(2 * n, false), want));
    odd = std::max(odd, std::fabs(detail::sph_j_line_integral(2 * n + 1, false)));
  }
  // b(t) umbral series at t = 1: term k is the t^(2k) coefficient; pi I_0 gives pi/(4^k (k!)^2).
  const UmbralExpr e = expand(gaussian_reduce(0.5, 0.25, 0.5, 20));
  for (int k = 0; k <= 20; ++k) {
    const double got = 0.5 * std::sqrt(pi) * reduce_term(e.terms()[static_cast<std::size_t>(k)], 1);
    const double want = pi / (std::pow(4.0, k) * std::pow(std::tgamma(k + 1.0), 2));
    coeff = std::max(coeff, rel(got, want));
  }
  bool i06 = true;
  for (const auto& r : verify_many({"I06"})) i06 = i06 && r.status == VerifyStatus::pass;
  char buf[200];
  std::snprintf(buf, sizeof buf, "b_2n rel %.2e, odd |b| %.2e, t^2k coeff rel %.2e, I06 %s", even, odd, coeff,
                i06 ? "pass" : "fail");
  return {even <= 1e-6 && odd <= 1e-10 && coeff <= 1e-13 && i06, buf};
}

Outcome c06() {
  double worst = 0.0;
  int n = 0;
  for (double a : {0.0, 0.5, 1.0})
    for (double b : {0.0, 0.5, 1.0})
      for (double g : {0.5, 1.0})
        for (double x : {0.5, 1.0, 2.0, 5.0}) {
          const auto r = at("I15", {{"alpha", a}, {"beta", b}, {"gamma", g}, {"x", x}});
          worst = std::max(worst, r.rel_err.value_or(INFINITY));
          ++n;
        }
  return {worst <= 1e-9, fmt("max rel err %.2e over %g points", worst, n)};
}

Outcome c07() {
  double worst = 0.0;
  const std::vector<std::array<double, 3>> pts = {{1.0, 1.0, 0.5}, {0.8, 1.2, 0.6}};
  for (const auto& [u, v, x] : pts) {
    worst = std::max(worst, at("I16", {{"u", u}, {"v", v}, {"x", x}}).rel_err.value_or(INFINITY));
    for (double g : {1.0, 2.0})
      worst = std::max(worst, at("I17", {{"gamma", g}, {"u", u}, {"v", v}, {"x", x}}).rel_err.value_or(INFINITY));
  }
  return {worst <= 1e-10, fmt("max rel err %.2e", worst)};
}

Outcome c08() {
  double worst = 0.0;
  const std::vector<std::pair<double, double>> orders = {{0.0, 0.0}, {0.5, 0.5}, {1.0, 2.0}};
  for (const auto& [mu, nu] : orders)
    for (double x : {0.5, 1.0, 3.0})
      worst = std::max(worst, at("I18", {{"mu", mu}, {"nu", nu}, {"x", x}}).rel_err.value_or(INFINITY));
  return {worst <= 1e-8, fmt("max rel err %.2e", worst)};
}

Outcome c09() {
  double worst = 0.0;
  for (double nu : {0.5, 1.0, 1.5}) {
    const auto a = at("I21", {{"nu", nu}});
    const auto b = at("I22", {{"nu", nu}});
    worst = std::max({worst, a.lhs ? std::fabs(*a.lhs - std::cos(nu * pi / 2)) : INFINITY,
                      b.lhs ? std::fabs(*b.lhs - std::sin(nu * pi / 2) / nu) : INFINITY});
  }
  const auto z = at("I21", {{"nu", 0.0}});
  const double e0 = z.lhs ? std::fabs(*z.lhs - 1.0) : INFINITY;
  return {worst <= 1e-5 && e0 <= 1e-6, fmt("max abs err %.2e, nu = 0 abs err %.2e", worst, e0)};
}

Outcome c10() {
  std::mt19937_64 rng(20240611);
  auto u = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  // orders on a 2^-20 grid so that mu + 1 + k is exact in both association orders
  auto ord = [&](double a, double b) { return std::ldexp(std::round(std::ldexp(u(a, b), 20)), -20); };
  double worst = 0.0;
  auto track = [&](double got, double want) {
    if (want != 0.0) worst = std::max(worst, rel(got, want));
  };
  for (int i = 0; i < 20; ++i) {
    const int n = static_cast<int>(u(0.0, 5.999));
    const double x = u(0.1, 10.0);
    const auto e = expand(umbral_cyl_j_series(n + 0.5, x));
    const double f = std::sqrt(0.5 * pi / x) * std::pow(0.5 * x, n + 0.5);
    for (int k = 0; k <= umbral_default_order; ++k)
      track(f * reduce_term(e.terms()[static_cast<std::size_t>(k)], 1), sph_j_series_term(n, x, k));
  }
  for (int i = 0; i < 20; ++i) {
    const double mu = ord(-0.9, 4.0), nu = ord(-0.9, 4.0), z = u(-25.0, 25.0);
    const auto e = expand(umbral_humbert2_series(mu, nu, z));
    for (int k = 0; k <= umbral_default_order; ++k)
      track(reduce_term(e.terms()[static_cast<std::size_t>(k)], 2), humbert2_series_term(mu, nu, z, k));
  }
  for (int i = 0; i < 20; ++i) {
    const double mu = ord(-0.9, 4.0), nu = ord(-0.9, 4.0), rho = ord(-0.9, 4.0), z = u(-25.0, 25.0);
    const auto e = expand(umbral_humbert3_series(mu, nu, rho, z));
    for (int k = 0; k <= umbral_default_order; ++k)
      track(reduce_term(e.terms()[static_cast<std::size_t>(k)], 3), humbert3_series_term(mu, nu, rho, z, k));
  }
  const double b0 = std::fabs(umbral_b(0.0).value - pi);
  return {worst <= 1e-15 && b0 <= 1e-14, fmt("max per-term rel err %.2e, |b_0 - pi| = %.2e", worst, b0)};
}

Outcome c11() {
  const auto reports = verify_many({"I03", "I04", "I08", "I09", "I10", "I23", "I24"});
  int pass = 0;
  for (const auto& r : reports) pass += r.status == VerifyStatus::pass && r.tol_abs <= 1e-6 && r.tol_rel <= 1e-6;
  return {pass == static_cast<int>(reports.size()), fmt("%g/%g grid points pass", pass, static_cast<double>(reports.size()))};
}

Outcome c12() {
  const auto t0 = std::chrono::steady_clock::now();
  const int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto reports = verify_all({}, threads);
  const double t = seconds_since(t0);
  int bad = 0;
  for (const auto& r : reports) bad += r.status != VerifyStatus::pass;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu records, %d not passing, %.1f s", reports.size(), bad, t);
  return {bad == 0 && t < 600.0 && reports.size() >= 120, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"I01 line integral of j0 equals pi", c01},
      {"I14 Struve integrals at alpha = -1.5, -1, -0.5", c02},
      {"I19 Bessel product integral", c03},
      {"I02 generating function, 25 terms", c04},
      {"I05/I06 b coefficients", c05},
      {"I15 Delta function quadrature vs 1F2", c06},
      {"I16/I17 double generating sums", c07},
      {"I18 Bessel product via Laguerre quadrature", c08},
      {"I21/I22 S-function integrals", c09},
      {"umbral equivalence and b_0 = pi", c10},
      {"ODE and recurrence suites", c11},
      {"full verify all run", c12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu  %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
