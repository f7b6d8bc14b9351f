#pragma once

#include <stdexcept>
#include <string>

namespace fibpart {

/// A parameter exceeded a configured memory or time guard.
class CapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Too few sequence terms to certify a recurrence of the requested order.
class InsufficientData : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoRealRoot : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative eigenvalue estimate did not reach its tolerance.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double best_estimate, double residual)
      : std::runtime_error(what), best_estimate_(best_estimate), residual_(residual) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double residual() const noexcept { return residual_; }

 private:
  double best_estimate_;
  double residual_;
};

}  // namespace fibpart
