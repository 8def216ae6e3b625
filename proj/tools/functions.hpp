#ifndef UMBRA_TOOLS_FUNCTIONS_HPP
#define UMBRA_TOOLS_FUNCTIONS_HPP

// Name -> evaluator table behind the eval and table commands.

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umbra/umbra.hpp"

namespace umbra::cli {

struct FunctionValue {
  double value = 0.0;
  std::optional<SeriesResult> meta;
};

using Args = std::map<std::string, double>;

struct FunctionSpec {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> integer_params;
  std::function<FunctionValue(const Args&, const EvalPolicy&)> fn;
};

namespace detail {

inline FunctionValue from(const SeriesResult& r) { return {r.value, r}; }
inline FunctionValue plain(double v) { return {v, std::nullopt}; }

inline int as_int(const Args& a, const std::string& k) { return static_cast<int>(a.at(k)); }

}  // namespace detail

inline const std::vector<FunctionSpec>& functions() {
  using detail::as_int;
  using detail::from;
  using detail::plain;
  static const std::vector<FunctionSpec> table = {
      {"gamma", {"x"}, {}, [](const Args& a, const EvalPolicy&) { return plain(gamma(a.at("x"))); }},
      {"rgamma", {"x"}, {}, [](const Args& a, const EvalPolicy&) { return plain(rgamma(a.at("x"))); }},
      {"hermite2", {"n", "y", "z"}, {"n"},
       [](const Args& a, const EvalPolicy&) { return plain(hermite2(as_int(a, "n"), a.at("y"), a.at("z"))); }},
      {"cyl_j", {"nu", "x"}, {}, [](const Args& a, const EvalPolicy& p) { return from(cyl_j(a.at("nu"), a.at("x"), p)); }},
      {"sph_j", {"n", "x"}, {"n"},
       [](const Args& a, const EvalPolicy& p) { return from(sph_j(as_int(a, "n"), a.at("x"), p)); }},
      {"sph_j_deriv", {"n", "x"}, {"n"},
       [](const Args& a, const EvalPolicy& p) { return plain(sph_j_deriv(as_int(a, "n"), a.at("x"), p)); }},
      {"rayleigh_jn", {"n", "x"}, {"n"},
       [](const Args& a, const EvalPolicy&) { return plain(rayleigh_jn(as_int(a, "n"), a.at("x"))); }},
      {"mod_i0", {"t"}, {}, [](const Args& a, const EvalPolicy& p) { return plain(mod_i0(a.at("t"), p)); }},
      {"struve_h", {"alpha", "x"}, {},
       [](const Args& a, const EvalPolicy& p) { return from(struve_h(a.at("alpha"), a.at("x"), p)); }},
      {"humbert2", {"mu", "nu", "z"}, {},
       [](const Args& a, const EvalPolicy& p) { return from(humbert2(a.at("mu"), a.at("nu"), a.at("z"), p)); }},
      {"humbert3", {"mu", "nu", "rho", "z"}, {},
       [](const Args& a, const EvalPolicy& p) {
         return from(humbert3(a.at("mu"), a.at("nu"), a.at("rho"), a.at("z"), p));
       }},
      {"hyp1f2", {"g", "a", "b", "z"}, {},
       [](const Args& a, const EvalPolicy& p) { return from(hyp1f2(a.at("g"), a.at("a"), a.at("b"), a.at("z"), p)); }},
      {"delta_fn", {"alpha", "beta", "gamma", "x"}, {},
       [](const Args& a, const EvalPolicy& p) {
         return plain(delta_fn(a.at("alpha"), a.at("beta"), a.at("gamma"), a.at("x"), p));
       }},
      {"s1", {"nu", "x"}, {}, [](const Args& a, const EvalPolicy& p) { return from(s1(a.at("nu"), a.at("x"), p)); }},
      {"s2", {"nu", "x"}, {}, [](const Args& a, const EvalPolicy& p) { return from(s2(a.at("nu"), a.at("x"), p)); }},
      {"anger", {"nu", "x"}, {}, [](const Args& a, const EvalPolicy& p) { return plain(anger(a.at("nu"), a.at("x"), p)); }},
      {"weber", {"nu", "x"}, {}, [](const Args& a, const EvalPolicy& p) { return plain(weber(a.at("nu"), a.at("x"), p)); }},
      {"umbral_sph_j", {"n", "x"}, {"n"},
       [](const Args& a, const EvalPolicy& p) { return from(umbral_sph_j(as_int(a, "n"), a.at("x"), umbral_default_order, p.rel_tol)); }},
      {"umbral_humbert2", {"mu", "nu", "z"}, {},
       [](const Args& a, const EvalPolicy& p) {
         return from(umbral_humbert2(a.at("mu"), a.at("nu"), a.at("z"), umbral_default_order, p.rel_tol));
       }},
      {"umbral_humbert3", {"mu", "nu", "rho", "z"}, {},
       [](const Args& a, const EvalPolicy& p) {
         return from(umbral_humbert3(a.at("mu"), a.at("nu"), a.at("rho"), a.at("z"), umbral_default_order, p.rel_tol));
       }},
      {"umbral_b", {"t"}, {},
       [](const Args& a, const EvalPolicy& p) { return from(umbral_b(a.at("t"), umbral_default_order, p.rel_tol)); }},
  };
  return table;
}

inline const FunctionSpec* find_function(const std::string& name) {
  for (const auto& f : functions())
    if (f.name == name) return &f;
  return nullptr;
}

/// Checks that args name exactly the declared parameters; integer parameters must be integral.
inline void check_args(const FunctionSpec& f, const Args& a) {
  for (const auto& p : f.params)
    if (!a.count(p)) throw domain_error(f.name + ": missing argument --" + p);
  for (const auto& [k, v] : a) {
    bool known = false;
    for (const auto& p : f.params) known = known || p == k;
    if (!known) throw domain_error(f.name + ": unknown argument --" + k);
    for (const auto& p : f.integer_params)
      if (p == k && std::floor(v) != v) throw domain_error(f.name + ": argument --" + k + " must be an integer");
  }
}

}  // namespace umbra::cli

#endif  // UMBRA_TOOLS_FUNCTIONS_HPP
