#pragma once

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

namespace testutil {

inline double rel_err(double got, double want) {
  if (got == want) return 0.0;
  return std::fabs(got - want) / std::max(std::fabs(got), std::fabs(want));
}

inline ::testing::AssertionResult near_rel(double got, double want, double tol) {
  const double e = rel_err(got, want);
  if (e <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << got << " want " << want << " rel err " << e << " > " << tol;
}

// Passes when either the absolute or the relative error is within tol.
inline ::testing::AssertionResult near_mixed(double got, double want, double tol) {
  if (std::fabs(got - want) <= tol || rel_err(got, want) <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << got << " want " << want << " abs err " << std::fabs(got - want);
}

}  // namespace testutil
