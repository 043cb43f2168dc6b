#pragma once

#include <cstddef>
#include <vector>

#include "macdonald/laurent_poly.hpp"
#include "macdonald/qcore.hpp"

namespace macdonald {

// Dense table of coefficients indexed by multi-indices p in Z_+^{n_vars}
// with |p| <= max_degree. Entries are stored level by level in |p|, and
// lexicographically (largest first) within a level.
class PowerTable {
 public:
  PowerTable(int n_vars, int max_degree);

  int n_vars() const noexcept { return n_vars_; }
  int max_degree() const noexcept { return max_degree_; }
  std::size_t size() const noexcept { return indices_.size(); }

  const std::vector<Exponent>& indices() const noexcept { return indices_; }
  const Exponent& index(std::size_t pos) const { return indices_[pos]; }
  // Position of p, or -1 if p is negative somewhere or beyond max_degree.
  long position(const Exponent& p) const;

  cplx& at(std::size_t pos) { return values_[pos]; }
  cplx at(std::size_t pos) const { return values_[pos]; }
  cplx& operator[](const Exponent& p);
  cplx operator[](const Exponent& p) const;

  const std::vector<cplx>& values() const noexcept { return values_; }

 private:
  long key(const Exponent& p) const;

  int n_vars_;
  int max_degree_;
  std::vector<Exponent> indices_;
  std::vector<cplx> values_;
  // Base-(max_degree+1) encoding of p -> position, -1 when |p| > max_degree.
  std::vector<long> lookup_;
};

// Product of two tables, truncated at the smaller of the two degrees.
PowerTable multiply_truncated(const PowerTable& a, const PowerTable& b);

}  // namespace macdonald
