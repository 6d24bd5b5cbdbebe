#ifndef GRUSHIN_ERRORS_HPP
#define GRUSHIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grushin {

// Input lies in the degenerate stratum (v0 = 0 or (x0, u0) = (0, 0)) where the
// oscillating parametrization does not exist.
class DegenerateInputError : public std::domain_error {
 public:
  explicit DegenerateInputError(const std::string& what) : std::domain_error(what) {}
};

// Target point is in the cut locus of the base point.
class CutLocusError : public std::runtime_error {
 public:
  explicit CutLocusError(const std::string& what) : std::runtime_error(what) {}
};

// A closed-form derivative is requested at sin_alpha(phi) = 0 where the
// expression divides by zero.
class DivisionGuardError : public std::domain_error {
 public:
  explicit DivisionGuardError(const std::string& what) : std::domain_error(what) {}
};

// Shooting iteration failed to converge; message carries diagnostics.
class NoConvergenceError : public std::runtime_error {
 public:
  explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive step-size controller stalled.
class StepSizeUnderflowError : public std::runtime_error {
 public:
  explicit StepSizeUnderflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace grushin

#endif
