#ifndef CAMPUS_EPI_ERRORS_HPP
#define CAMPUS_EPI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace campus_epi {

/// Offspring mean >= 1: mean total progeny (and hence R0) is infinite.
class SupercriticalError : public std::domain_error {
 public:
  explicit SupercriticalError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative solver ran out of its iteration budget.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, long iterations, double residual)
      : std::runtime_error(what + " (iterations=" + std::to_string(iterations) +
                           ", residual=" + std::to_string(residual) + ")"),
        iterations(iterations),
        residual(residual) {}

  long iterations;
  double residual;
};

/// Schedule violates structural constraints (seat total, class sizes).
class InvalidScheduleError : public std::invalid_argument {
 public:
  explicit InvalidScheduleError(const std::string& what) : std::invalid_argument(what) {}
};

/// No valid 3-distinct-classes assignment could be constructed.
class EnrollmentInfeasibleError : public std::runtime_error {
 public:
  explicit EnrollmentInfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace campus_epi

#endif
