#ifndef UMBRA_QUADRATURE_HPP
#define UMBRA_QUADRATURE_HPP

// Adaptive Gauss-Kronrod quadrature on finite intervals, generalized
// Gauss-Laguerre rules for s^sigma e^-s kernels, and cell-wise oscillatory
// integration with Levin u-transform acceleration.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "umbra/compensated.hpp"
#include "umbra/error.hpp"

namespace umbra {

using Integrand = std::function<double(double)>;

enum class DomainKind { finite, semi_infinite, real_line };

struct Domain {
  DomainKind kind = DomainKind::finite;
  double a = 0.0;
  double b = 1.0;

  static Domain finite(double a, double b) { return {DomainKind::finite, a, b}; }
  static Domain semi_infinite(double a) { return {DomainKind::semi_infinite, a, std::numeric_limits<double>::infinity()}; }
  static Domain real_line() {
    return {DomainKind::real_line, -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  }
};

enum class StrategyKind { adaptive, laguerre, oscillatory };

struct Strategy {
  StrategyKind kind = StrategyKind::adaptive;
  double sigma = 0.0;  // laguerre weight exponent
  int nodes = 64;
  double period_hint = std::numbers::pi;  // oscillatory cell length
  double start_x = 0.0;                   // first cell of the accelerated tail
  int max_cells = 4000;

  static Strategy adaptive() { return {}; }
  static Strategy laguerre(double sigma, int nodes) {
    Strategy s;
    s.kind = StrategyKind::laguerre;
    s.sigma = sigma;
    s.nodes = nodes;
    return s;
  }
  static Strategy oscillatory(double period_hint, double start_x = 0.0, int max_cells = 4000) {
    Strategy s;
    s.kind = StrategyKind::oscillatory;
    s.period_hint = period_hint;
    s.start_x = start_x;
    s.max_cells = max_cells;
    return s;
  }
};

enum class Symmetry { none, even, odd };

struct QuadraturePlan {
  Domain domain;
  Strategy strategy;
  double target_abs = 1e-13;
  double target_rel = 1e-11;
  int max_subdivisions = 2000;
  Symmetry symmetry = Symmetry::none;

  void validate() const {
    if (domain.kind == DomainKind::finite && !(domain.a < domain.b))
      throw domain_error("QuadraturePlan: finite domain requires a < b");
    if (strategy.kind == StrategyKind::laguerre && !(strategy.sigma > -1.0))
      throw domain_error("QuadraturePlan: laguerre weight exponent must exceed -1");
    if (strategy.kind == StrategyKind::oscillatory && !(strategy.period_hint > 0.0))
      throw domain_error("QuadraturePlan: oscillatory period_hint must be positive");
    if (!(target_abs >= 0.0) || !(target_rel >= 0.0) || (target_abs == 0.0 && target_rel == 0.0))
      throw domain_error("QuadraturePlan: accuracy targets must be nonnegative and not both zero");
    if (max_subdivisions < 1) throw domain_error("QuadraturePlan: max_subdivisions must be positive");
  }

  [[nodiscard]] double tolerance(double value) const { return std::max(target_abs, target_rel * std::fabs(value)); }
};

enum class QuadStatus { converged, max_refinement, accelerated };

inline const char* to_string(QuadStatus s) {
  switch (s) {
    case QuadStatus::converged: return "converged";
    case QuadStatus::max_refinement: return "max_refinement";
    case QuadStatus::accelerated: return "accelerated";
  }
  return "unknown";
}

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int cells_or_nodes = 0;
  QuadStatus status = QuadStatus::converged;
};

namespace detail {

struct KronrodCell {
  double a = 0.0;
  double b = 0.0;
  double result = 0.0;
  double error = 0.0;
};

// 21-point Kronrod rule with its embedded 10-point Gauss rule; error
// heuristics follow QUADPACK's qk21.
inline KronrodCell gk21(const Integrand& f, double a, double b) {
  static constexpr double xgk[11] = {
      0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
      0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
      0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
      0.148874338981631210884826001129720, 0.0};
  static constexpr double wgk[11] = {
      0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
      0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
      0.123491976262065851077958109831074, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
      0.147739104901338491374841515972068, 0.149445554002916905664936468389821};
  static constexpr double wg[5] = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                                   0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                                   0.295524224714752870173892994651338};
  constexpr double epmach = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();

  auto eval = [&](double x) {
    const double v = f(x);
    if (!std::isfinite(v)) throw domain_error("quadrature: non-finite integrand value at x = " + std::to_string(x));
    return v;
  };

  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double dhlgth = std::fabs(hlgth);
  double fv1[10];
  double fv2[10];
  const double fc = eval(centr);
  double resg = 0.0;
  double resk = wgk[10] * fc;
  double resabs = std::fabs(resk);
  for (int j = 0; j < 5; ++j) {
    const int jtw = 2 * j + 1;
    const double absc = hlgth * xgk[jtw];
    const double f1 = eval(centr - absc);
    const double f2 = eval(centr + absc);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += wg[j] * (f1 + f2);
    resk += wgk[jtw] * (f1 + f2);
    resabs += wgk[jtw] * (std::fabs(f1) + std::fabs(f2));
  }
  for (int j = 0; j < 5; ++j) {
    const int jtwm1 = 2 * j;
    const double absc = hlgth * xgk[jtwm1];
    const double f1 = eval(centr - absc);
    const double f2 = eval(centr + absc);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += wgk[jtwm1] * (f1 + f2);
    resabs += wgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
  }
  const double reskh = 0.5 * resk;
  double resasc = wgk[10] * std::fabs(fc - reskh);
  for (int j = 0; j < 10; ++j) resasc += wgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

  KronrodCell c;
  c.a = a;
  c.b = b;
  c.result = resk * hlgth;
  resabs *= dhlgth;
  resasc *= dhlgth;
  double err = std::fabs((resk - resg) * hlgth);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > uflow / (50.0 * epmach)) err = std::max(epmach * 50.0 * resabs, err);
  c.error = err;
  return c;
}

}  // namespace detail

/// Adaptive bisection with the 21-point Gauss-Kronrod pair.
inline QuadratureResult integrate_finite(const Integrand& f, double a, double b, const QuadraturePlan& plan = {}) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw domain_error("integrate_finite: endpoints must be finite");
  if (a == b) return {0.0, 0.0, 0, QuadStatus::converged};
  if (a > b) {
    QuadratureResult r = integrate_finite(f, b, a, plan);
    r.value = -r.value;
    return r;
  }
  std::vector<detail::KronrodCell> cells{detail::gk21(f, a, b)};
  double total = cells.front().result;
  double error = cells.front().error;
  QuadStatus status = QuadStatus::converged;
  int stalled = 0;
  while (error > plan.tolerance(total)) {
    if (static_cast<int>(cells.size()) >= plan.max_subdivisions) {
      status = QuadStatus::max_refinement;
      break;
    }
    auto worst = std::max_element(cells.begin(), cells.end(),
                                  [](const auto& l, const auto& r) { return l.error < r.error; });
    const double lo = worst->a;
    const double hi = worst->b;
    const double mid = 0.5 * (lo + hi);
    if (!(lo < mid && mid < hi) ||
        (hi - lo) <= 100.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(lo), std::fabs(hi))) {
      status = QuadStatus::max_refinement;  // interval exhausted by roundoff
      break;
    }
    const detail::KronrodCell parent = *worst;
    *worst = detail::gk21(f, lo, mid);
    cells.push_back(detail::gk21(f, mid, hi));
    // Roundoff detection as in QUADPACK: bisection no longer improves the estimate.
    const double r12 = worst->result + cells.back().result;
    const double e12 = worst->error + cells.back().error;
    if (std::fabs(parent.result - r12) <= 1e-5 * std::fabs(r12) && e12 >= 0.99 * parent.error) ++stalled;
    if (stalled >= 6) {
      status = QuadStatus::max_refinement;
      CompensatedSum t;
      for (const auto& c : cells) t += c.result;
      total = t.value();
      break;
    }
    CompensatedSum t;
    CompensatedSum e;
    for (const auto& c : cells) {
      t += c.result;
      e += c.error;
    }
    total = t.value();
    error = e.value();
  }
  return {total, error, static_cast<int>(cells.size()), status};
}

/// Adaptive quadrature over [a, inf) through x = a + (1 - t)/t.
inline QuadratureResult integrate_semi_infinite(const Integrand& f, double a, const QuadraturePlan& plan = {}) {
  const Integrand g = [&](double t) {
    const double x = a + (1.0 - t) / t;
    return f(x) / (t * t);
  };
  return integrate_finite(g, 0.0, 1.0, plan);
}

struct LaguerreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

// Near the small roots the three-term recurrence cancels to ~1e-13 in
// binary64, so the Laguerre helpers below run in long double.
using wide = long double;

// L_n^(sigma)(x) and L_{n-1}^(sigma)(x), rescaled by a common factor to stay in range.
inline std::pair<wide, wide> laguerre_pair(int n, wide sigma, wide x) {
  wide prev = 1.0L;
  wide cur = 1.0L + sigma - x;
  if (n == 0) return {prev, 0.0L};
  for (int k = 1; k < n; ++k) {
    const wide next = ((2.0L * k + 1.0L + sigma - x) * cur - (k + sigma) * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
    if (std::fabs(cur) > 1e150L) {
      cur *= 1e-150L;
      prev *= 1e-150L;
    }
  }
  return {cur, prev};
}

// L_{n-1}^(sigma)(x) as mantissa * 1e150^steps.
struct ScaledValue {
  wide mantissa = 1.0L;
  int steps = 0;
};

inline ScaledValue laguerre_prev_scaled(int n, wide sigma, wide x) {
  if (n == 1) return {1.0L, 0};
  wide prev = 1.0L;
  wide cur = 1.0L + sigma - x;
  int steps = 0;
  for (int k = 1; k < n - 1; ++k) {
    const wide next = ((2.0L * k + 1.0L + sigma - x) * cur - (k + sigma) * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
    if (std::fabs(cur) > 1e150L) {
      cur *= 1e-150L;
      prev *= 1e-150L;
      ++steps;
    }
  }
  return {cur, steps};
}

inline LaguerreRule build_laguerre_rule(int n, double sigma) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + 1.0 + sigma;
  for (int i = 1; i < n; ++i) sub(i - 1) = std::sqrt(i * (i + sigma));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
  LaguerreRule r;
  r.nodes.resize(static_cast<std::size_t>(n));
  r.weights.resize(static_cast<std::size_t>(n));
  // Gamma(n+sigma+1)/(n! (n+sigma)^2) by products; exp(lgamma) would cost ~1e-14.
  wide norm = std::tgamma(static_cast<wide>(sigma) + 1.0L);
  for (int k = 1; k <= n; ++k) norm *= (k + static_cast<wide>(sigma)) / k;
  norm /= (n + static_cast<wide>(sigma)) * (n + static_cast<wide>(sigma));
  for (int i = 0; i < n; ++i) {
    wide x = solver.eigenvalues()(i);
    for (int it = 0; it < 10; ++it) {  // Newton polish on L_n
      const auto [ln, lm] = laguerre_pair(n, sigma, x);
      const wide d = (n * ln - (n + static_cast<wide>(sigma)) * lm) / x;
      const wide dx = ln / d;
      x -= dx;
      if (std::fabs(dx) <= 4.0L * std::numeric_limits<wide>::epsilon() * x) break;
    }
    r.nodes[static_cast<std::size_t>(i)] = static_cast<double>(x);
    const ScaledValue prev = laguerre_prev_scaled(n, sigma, x);
    wide w = norm * x / (prev.mantissa * prev.mantissa);
    for (int k = 0; k < 2 * prev.steps; ++k) w *= 1e-150L;
    r.weights[static_cast<std::size_t>(i)] = static_cast<double>(w);
  }
  return r;
}

}  // namespace detail

/// Cached generalized Gauss-Laguerre rule for the weight s^sigma e^-s.
inline const LaguerreRule& laguerre_rule(int n, double sigma) {
  static std::mutex mutex;
  static std::map<std::pair<int, double>, LaguerreRule> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(n, sigma);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, detail::build_laguerre_rule(n, sigma)).first;
  return it->second;
}

/// int_0^inf s^sigma e^-s f(s) ds, error from halving the node count.
inline QuadratureResult integrate_laguerre(const Integrand& f, double sigma, int nodes, const QuadraturePlan& plan = {}) {
  if (!(sigma > -1.0)) throw domain_error("integrate_laguerre: sigma must exceed -1");
  if (nodes < 8 || nodes > 200) throw domain_error("integrate_laguerre: node count must lie in [8, 200]");
  auto apply = [&](int n) {
    const LaguerreRule& r = laguerre_rule(n, sigma);
    CompensatedSum s;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
      const double v = f(r.nodes[i]);
      if (!std::isfinite(v)) throw domain_error("integrate_laguerre: non-finite integrand value");
      s += r.weights[i] * v;
    }
    return s.value();
  };
  const double q = apply(nodes);
  const double half = apply(nodes / 2);
  QuadratureResult res;
  res.value = q;
  res.error_estimate = std::fabs(q - half);
  res.cells_or_nodes = nodes;
  res.status = res.error_estimate <= plan.tolerance(q) ? QuadStatus::converged : QuadStatus::max_refinement;
  return res;
}

namespace detail {

// Levin u-transform of partial sums s[first..first+k] with remainder
// estimates w_m = (m + 1) a_m.
inline double levin_u(const std::vector<double>& s, const std::vector<double>& a, std::size_t first, int k) {
  CompensatedSum num;
  CompensatedSum den;
  const double beta = 1.0;
  const double nk = static_cast<double>(first) + k + beta;
  double binom = 1.0;
  for (int j = 0; j <= k; ++j) {
    const std::size_t m = first + static_cast<std::size_t>(j);
    const double ratio = (static_cast<double>(m) + beta) / nk;
    const double c = (j % 2 == 0 ? 1.0 : -1.0) * binom * std::pow(ratio, k - 1);
    const double w = (static_cast<double>(m) + beta) * a[m];
    num += c * s[m] / w;
    den += c / w;
    binom = binom * (k - j) / (j + 1.0);
  }
  return num.value() / den.value();
}

// Repeated averaging of the last partial sums; suited to alternating cells.
inline double euler_average(const std::vector<double>& s, int depth) {
  const std::size_t n = s.size();
  const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(depth) + 1, n);
  std::vector<double> v(s.end() - static_cast<std::ptrdiff_t>(m), s.end());
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = 0; i + level < m; ++i) v[i] = 0.5 * (v[i] + v[i + 1]);
  return v.front();
}

}  // namespace detail

inline constexpr int levin_max_order = 20;

/// int_start^inf f(x) dx for oscillatory f: cells of length period_hint,
/// each integrated adaptively, followed by Levin u acceleration of the
/// partial sums (repeated averaging when the transform is undefined).
inline QuadratureResult integrate_oscillatory(const Integrand& f, double start, double period_hint,
                                              const QuadraturePlan& plan = {}) {
  if (!(period_hint > 0.0)) throw domain_error("integrate_oscillatory: period_hint must be positive");
  if (!std::isfinite(start)) throw domain_error("integrate_oscillatory: start must be finite");
  QuadraturePlan cell_plan = plan;
  cell_plan.target_abs = 0.01 * plan.target_abs;
  cell_plan.target_rel = 0.1 * plan.target_rel;
  const int max_cells = std::max(plan.strategy.max_cells, 8);

  std::vector<double> a;
  std::vector<double> s;
  CompensatedSum running;
  double prev_estimate = std::numeric_limits<double>::quiet_NaN();
  int settled = 0;
  int zero_run = 0;
  QuadratureResult res;
  res.status = QuadStatus::max_refinement;
  for (int n = 0; n < max_cells; ++n) {
    const double lo = start + n * period_hint;
    const double hi = start + (n + 1) * period_hint;
    const QuadratureResult cell = integrate_finite(f, lo, hi, cell_plan);
    a.push_back(cell.value);
    running += cell.value;
    s.push_back(running.value());
    res.cells_or_nodes = n + 1;

    zero_run = cell.value == 0.0 ? zero_run + 1 : 0;
    if (zero_run >= 3) {  // compact support: the tail is exactly zero
      res.value = s.back();
      res.error_estimate = 0.0;
      res.status = QuadStatus::converged;
      return res;
    }
    if (n < 6) continue;

    // Divergence and non-alternating diagnostics over the last cells.
    if (n >= 16) {
      const double now = std::fabs(a[static_cast<std::size_t>(n)]) + std::fabs(a[static_cast<std::size_t>(n - 1)]);
      const double back =
          std::fabs(a[static_cast<std::size_t>(n - 12)]) + std::fabs(a[static_cast<std::size_t>(n - 13)]);
      if (now > 1.5 * back && now > plan.target_abs)
        throw convergence_error("integrate_oscillatory: cell magnitudes grow, the integral diverges");
      bool same_sign = true;
      for (int j = n - 12; j < n; ++j)
        if ((a[static_cast<std::size_t>(j)] > 0.0) != (a[static_cast<std::size_t>(n)] > 0.0)) same_sign = false;
      if (same_sign && now > 0.98 * back && now > plan.target_abs)
        throw convergence_error("integrate_oscillatory: cells neither alternate nor decay");
    }

    bool levin_ok = true;
    const int k = std::min(n - 1, levin_max_order);
    const std::size_t first = static_cast<std::size_t>(n - k);
    for (std::size_t m = first; m <= static_cast<std::size_t>(n); ++m)
      if (a[m] == 0.0) levin_ok = false;
    double estimate = levin_ok ? detail::levin_u(s, a, first, k) : detail::euler_average(s, std::min(n, 12));
    if (!std::isfinite(estimate)) estimate = detail::euler_average(s, std::min(n, 12));

    const double diff = std::fabs(estimate - prev_estimate);
    prev_estimate = estimate;
    res.value = estimate;
    res.error_estimate = std::isfinite(diff) ? diff : std::fabs(a.back());
    settled = diff <= plan.tolerance(estimate) ? settled + 1 : 0;
    if (settled >= 3) {
      res.status = QuadStatus::accelerated;
      return res;
    }
  }
  return res;
}

/// coeff * x^power; algebraic (non-oscillating) tail components.
struct PowerTerm {
  double coeff = 0.0;
  double power = 0.0;
};

/// Finite sum of power terms with powers below -1, integrable on [X, inf).
struct AsymptoticSeries {
  std::vector<PowerTerm> terms;

  [[nodiscard]] double value(double x) const {
    CompensatedSum s;
    for (const auto& t : terms) s += t.coeff * std::pow(x, t.power);
    return s.value();
  }

  [[nodiscard]] double tail_integral(double x) const {
    CompensatedSum s;
    for (const auto& t : terms) {
      if (!(t.power < -1.0)) throw domain_error("AsymptoticSeries: power term not integrable at infinity");
      s += -t.coeff * std::pow(x, t.power + 1.0) / (t.power + 1.0);
    }
    return s.value();
  }
};

/// int_a^inf f: adaptive on [a, X], then on [X, inf) the algebraic part g is
/// integrated in closed form and f - g by accelerated cells.
inline QuadratureResult integrate_split_tail(const Integrand& f, double a, double split, const AsymptoticSeries& g,
                                             double period_hint, const QuadraturePlan& plan = {}) {
  QuadraturePlan head_plan = plan;
  head_plan.target_abs = 0.1 * plan.target_abs;
  head_plan.target_rel = 0.1 * plan.target_rel;
  const QuadratureResult head = integrate_finite(f, a, split, head_plan);
  const Integrand rest = [&](double x) { return f(x) - g.value(x); };
  const QuadratureResult tail = integrate_oscillatory(rest, split, period_hint, plan);
  QuadratureResult r;
  r.value = head.value + tail.value + g.tail_integral(split);
  r.error_estimate = head.error_estimate + tail.error_estimate;
  r.cells_or_nodes = head.cells_or_nodes + tail.cells_or_nodes;
  r.status = (head.status == QuadStatus::max_refinement || tail.status == QuadStatus::max_refinement)
                 ? QuadStatus::max_refinement
                 : QuadStatus::accelerated;
  return r;
}

namespace detail {

inline QuadratureResult integrate_half_line(const Integrand& f, const QuadraturePlan& plan) {
  switch (plan.strategy.kind) {
    case StrategyKind::adaptive: return integrate_semi_infinite(f, 0.0, plan);
    case StrategyKind::oscillatory: {
      const double x0 = std::max(plan.strategy.start_x, 0.0);
      const QuadratureResult head = integrate_finite(f, 0.0, x0, plan);
      const QuadratureResult tail = integrate_oscillatory(f, x0, plan.strategy.period_hint, plan);
      return {head.value + tail.value, head.error_estimate + tail.error_estimate,
              head.cells_or_nodes + tail.cells_or_nodes,
              tail.status == QuadStatus::max_refinement ? QuadStatus::max_refinement : tail.status};
    }
    case StrategyKind::laguerre: break;
  }
  throw domain_error("integrate_real_line: laguerre strategy does not apply on the real line");
}

}  // namespace detail

/// int_R f, split at 0; even integrands use twice the positive half.
inline QuadratureResult integrate_real_line(const Integrand& f, const QuadraturePlan& plan = {}) {
  plan.validate();
  const QuadratureResult right = detail::integrate_half_line(f, plan);
  if (plan.symmetry == Symmetry::even) return {2.0 * right.value, 2.0 * right.error_estimate, right.cells_or_nodes, right.status};
  const Integrand mirrored = [&](double x) { return f(-x); };
  const QuadratureResult left = detail::integrate_half_line(mirrored, plan);
  QuadratureResult r;
  r.value = left.value + right.value;
  r.error_estimate = left.error_estimate + right.error_estimate;
  r.cells_or_nodes = left.cells_or_nodes + right.cells_or_nodes;
  r.status = (left.status == QuadStatus::max_refinement || right.status == QuadStatus::max_refinement)
                 ? QuadStatus::max_refinement
                 : right.status;
  return r;
}

/// Dispatches on the plan's domain and strategy.
inline QuadratureResult integrate(const Integrand& f, const QuadraturePlan& plan) {
  plan.validate();
  switch (plan.domain.kind) {
    case DomainKind::finite: return integrate_finite(f, plan.domain.a, plan.domain.b, plan);
    case DomainKind::real_line: return integrate_real_line(f, plan);
    case DomainKind::semi_infinite: break;
  }
  const double a = plan.domain.a;
  switch (plan.strategy.kind) {
    case StrategyKind::adaptive: return integrate_semi_infinite(f, a, plan);
    case StrategyKind::laguerre: {
      // int_a^inf (x-a)^sigma e^-(x-a) f(x) dx
      const Integrand g = [&](double s) { return f(a + s); };
      return integrate_laguerre(g, plan.strategy.sigma, plan.strategy.nodes, plan);
    }
    case StrategyKind::oscillatory: {
      const double x0 = std::max(plan.strategy.start_x, a);
      const QuadratureResult head = integrate_finite(f, a, x0, plan);
      const QuadratureResult tail = integrate_oscillatory(f, x0, plan.strategy.period_hint, plan);
      return {head.value + tail.value, head.error_estimate + tail.error_estimate,
              head.cells_or_nodes + tail.cells_or_nodes, tail.status};
    }
  }
  return {};
}

}  // namespace umbra

#endif  // UMBRA_QUADRATURE_HPP
