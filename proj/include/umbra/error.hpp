#ifndef UMBRA_ERROR_HPP
#define UMBRA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace umbra {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical or supported domain (poles, singular
/// limits, unsupported orders, non-finite integrand values).
class domain_error : public error {
 public:
  using error::error;
};

/// A series, quadrature or acceleration step failed to meet its target.
class convergence_error : public error {
 public:
  using error::error;
};

/// Result not representable in binary64.
class overflow_error : public error {
 public:
  using error::error;
};

}  // namespace umbra

#endif  // UMBRA_ERROR_HPP
