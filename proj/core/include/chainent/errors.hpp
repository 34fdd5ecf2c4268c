#pragma once

#include <stdexcept>
#include <string>

namespace chainent {

// Failure categories carried by every exception this library throws.  Callers
// (notably the CLI) map kinds to exit codes and machine-readable tags.
enum class ErrorKind {
  invalid_argument,         // parameter outside its documented domain
  dimension_mismatch,       // incompatible sizes between arguments
  numerical_singularity,    // evaluation hit a pole / zero denominator
  tolerance_not_met,        // requested accuracy unreachable within budget
  correlation_invalid,      // correlation data violates its structural bounds
  eigensolver_failure,      // dense eigensolver / SVD did not converge
  non_convergence,          // iterative solver exhausted its iteration budget
  degenerate_ground_state,  // ground level tied across symmetry sectors
  critical_divergence,      // quantity undefined at a critical point
  incomplete_spectrum,      // operation requires a complete spectrum
  uncertain_rank,           // prefix too short to determine the count
};

inline const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::numerical_singularity: return "numerical_singularity";
    case ErrorKind::tolerance_not_met: return "tolerance_not_met";
    case ErrorKind::correlation_invalid: return "correlation_invalid";
    case ErrorKind::eigensolver_failure: return "eigensolver_failure";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::degenerate_ground_state: return "degenerate_ground_state";
    case ErrorKind::critical_divergence: return "critical_divergence";
    case ErrorKind::incomplete_spectrum: return "incomplete_spectrum";
    case ErrorKind::uncertain_rank: return "uncertain_rank";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chainent
