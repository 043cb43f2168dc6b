#pragma once

// Symmetric Macdonald polynomials P_lambda = m_lambda + lower terms, built as
// eigenvectors of D^1 on the monomial symmetric basis, and the explicit
// two-variable family coming from terminating F_q series.

#include <cstdint>
#include <vector>

#include "macdonald/laurent_poly.hpp"
#include "macdonald/operators.hpp"
#include "macdonald/qcore.hpp"

namespace macdonald {

class Partition {
 public:
  // Throws DomainError unless parts are nonnegative and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;  // |lambda|
  // Parts padded with zeros to length n; DomainError if too long.
  Exponent padded(int n) const;

 private:
  std::vector<int> parts_;
};

// z_2^m F_q(k, -m, 1-m-k, (q/t) z_1/z_2)
LaurentPoly macdonald_a1(int m, const QParams& p);

// Throws ResonanceError if two dominance-comparable partitions share the
// D^1 eigenvalue.
LaurentPoly macdonald_poly(const Partition& lam, int n, const QParams& p,
                           std::uint64_t seed = kDefaultSampleSeed);

// Eigenvalue of D^m on P_lambda: c^m at gamma = reversed(lambda padded to n).
cplx macdonald_eigenvalue(const Partition& lam, int n, int m, const QParams& p);

// Solves the two-variable series at lambda = (-(m+k)/2, (m+k)/2), removes
// the power prefactor and returns the largest coefficient deviation from
// macdonald_a1(m), including every coefficient beyond degree m.
double degeneration_check(int m, const QParams& p);

}  // namespace macdonald
