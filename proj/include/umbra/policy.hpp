#ifndef UMBRA_POLICY_HPP
#define UMBRA_POLICY_HPP

#include <string_view>

#include "umbra/error.hpp"

namespace umbra {

/// Tolerances and limits shared by the series and quadrature evaluators.
struct EvalPolicy {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  int max_terms = 500;
  // Upper end of the binary64 series path. Below it the series starts in
  // binary64 and is promoted to extended precision when the cancellation
  // estimate says binary64 cannot certify rel_tol.
  double crossover_x = 25.0;
  // Upper end of the extended-precision series path; asymptotic expansions
  // take over beyond it.
  double extended_x = 60.0;

  void validate() const {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw domain_error("EvalPolicy: rel_tol must lie in (0, 1)");
    if (!(abs_tol >= 0.0)) throw domain_error("EvalPolicy: abs_tol must be nonnegative");
    if (max_terms < 1) throw domain_error("EvalPolicy: max_terms must be positive");
    if (!(crossover_x < extended_x)) throw domain_error("EvalPolicy: crossover_x must be below extended_x");
  }
};

enum class EvalPath { series, extended_precision_series, asymptotic, closed_form };

constexpr std::string_view to_string(EvalPath p) {
  switch (p) {
    case EvalPath::series: return "series";
    case EvalPath::extended_precision_series: return "extended-precision-series";
    case EvalPath::asymptotic: return "asymptotic";
    case EvalPath::closed_form: return "closed-form";
  }
  return "unknown";
}

struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  double tail_estimate = 0.0;
  EvalPath path = EvalPath::series;
  bool converged = true;
};

}  // namespace umbra

#endif  // UMBRA_POLICY_HPP
