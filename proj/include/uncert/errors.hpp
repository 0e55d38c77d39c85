#ifndef UNCERT_ERRORS_HPP_
#define UNCERT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace uncert {

/// Eigenvalue or root solver failed to reach its certified tolerance.
struct SolverFailure : std::runtime_error {
  explicit SolverFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Automatic basis escalation hit the configured cap before the truncation
/// diagnostic became adequate.
struct TruncationCapExceeded : std::runtime_error {
  explicit TruncationCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Transport marginals are malformed (mass mismatch or empty support).
struct TransportInfeasible : std::runtime_error {
  explicit TransportInfeasible(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace uncert

#endif  // UNCERT_ERRORS_HPP_
