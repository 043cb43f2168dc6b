#pragma once

#include <map>
#include <span>
#include <vector>

#include "macdonald/qcore.hpp"

namespace macdonald {

using Exponent = std::vector<int>;

// Finite Laurent polynomial in n variables. Zero coefficients are never
// stored; iteration order is lexicographic in the exponent vector.
class LaurentPoly {
 public:
  explicit LaurentPoly(int n);

  static LaurentPoly constant(int n, cplx c);

  int n() const noexcept { return n_; }
  const std::map<Exponent, cplx>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  // Adds c to the coefficient of z^e.
  void add(const Exponent& e, cplx c);
  cplx coefficient(const Exponent& e) const;

  cplx evaluate(std::span<const cplx> z) const;

  // Drops every coefficient with modulus <= tol.
  void prune(double tol);

  // Largest coefficient deviation from the coefficient at the permuted
  // exponent, over all transpositions.
  double asymmetry() const;

  double max_abs_coefficient() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(cplx s);

 private:
  int n_;
  std::map<Exponent, cplx> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(cplx s, LaurentPoly a);

// max |a_e - b_e| over the union of supports.
double max_coefficient_difference(const LaurentPoly& a, const LaurentPoly& b);

// Monomial symmetric function m_nu: sum of z^e over distinct rearrangements
// e of nu.
LaurentPoly monomial_symmetric(const Exponent& nu);
cplx monomial_symmetric_value(const Exponent& nu, std::span<const cplx> z);

}  // namespace macdonald
