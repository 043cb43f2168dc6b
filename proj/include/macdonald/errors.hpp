#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace macdonald {

// Parameter outside the domain of a function (|q| >= 1, z = 0, bad index, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A q-Gamma argument sits on (or within tolerance of) a pole.
class PoleError : public DomainError {
 public:
  PoleError(const std::string& what, long offending_integer)
      : DomainError(what), offending_integer_(offending_integer) {}
  long offending_integer() const noexcept { return offending_integer_; }

 private:
  long offending_integer_;
};

// Evaluation point outside the region where a series expansion converges.
class ZoneError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Coincident coordinates in a difference-operator weight.
class SingularConfigurationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A theta/bracket denominator vanishes (parameter on the q-lattice).
class ResonanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A recursion divisor c(lambda+rho) - c(eta+kappa(p)+rho) vanishes.
class NondegeneracyError : public ResonanceError {
 public:
  NondegeneracyError(const std::string& what, std::vector<int> multi_index)
      : ResonanceError(what), multi_index_(std::move(multi_index)) {}
  const std::vector<int>& multi_index() const noexcept { return multi_index_; }

 private:
  std::vector<int> multi_index_;
};

// Interpolation system stayed singular after repeated resampling.
class NumericDegeneracyError : public ResonanceError {
 public:
  using ResonanceError::ResonanceError;
};

// A series or iteration did not reach its tolerance within the iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace macdonald
