// Small tour: a spherical Bessel integral by quadrature, the same function
// through the umbral image, and one catalog entry checked end to end.

#include <cmath>
#include <cstdio>
#include <numbers>

#include "umbra/umbra.hpp"

int main() {
  using namespace umbra;

  QuadraturePlan plan;
  plan.domain = Domain::semi_infinite(0.0);
  plan.strategy = Strategy::oscillatory(std::numbers::pi, 10.0 * std::numbers::pi);
  plan.target_abs = 1e-12;
  const auto q = integrate([](double x) { return sph_j(0, x).value; }, plan);
  std::printf("2 * int_0^inf j0(x) dx = %.15f  (pi = %.15f)\n", 2.0 * q.value, std::numbers::pi);

  for (double x : {0.5, 3.0, 12.0}) {
    const auto direct = sph_j(2, x);
    const auto shadow = umbral_sph_j(2, x);
    std::printf("j2(%-4g) direct %.16f  umbral %.16f  [%s, %d terms]\n", x, direct.value, shadow.value,
                std::string(to_string(shadow.path)).c_str(), shadow.terms_used);
  }

  const auto reports = verify_many({"I14"});
  for (const auto& r : reports)
    std::printf("%s alpha=%+.2f lhs=%+.12f rhs=%+.12f %s\n", r.id.c_str(), r.params["alpha"], r.lhs.value_or(NAN),
                r.rhs.value_or(NAN), to_string(r.status));
  return 0;
}
