#include "macdonald/laurent_poly.hpp"

#include <algorithm>
#include <cmath>

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

cplx monomial_value(const Exponent& e, std::span<const cplx> z) {
  cplx v = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) v *= std::pow(z[i], e[i]);
  }
  return v;
}

}  // namespace

LaurentPoly::LaurentPoly(int n) : n_(n) {
  if (n < 1) throw DomainError("LaurentPoly: n must be positive");
}

LaurentPoly LaurentPoly::constant(int n, cplx c) {
  LaurentPoly p(n);
  p.add(Exponent(n, 0), c);
  return p;
}

void LaurentPoly::add(const Exponent& e, cplx c) {
  if (static_cast<int>(e.size()) != n_) throw DomainError("LaurentPoly: exponent length mismatch");
  if (c == cplx(0.0)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == cplx(0.0)) terms_.erase(it);
  }
}

cplx LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

cplx LaurentPoly::evaluate(std::span<const cplx> z) const {
  if (static_cast<int>(z.size()) != n_) throw DomainError("LaurentPoly: point dimension mismatch");
  cplx sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c * monomial_value(e, z);
  return sum;
}

void LaurentPoly::prune(double tol) {
  std::erase_if(terms_, [tol](const auto& kv) { return std::abs(kv.second) <= tol; });
}

double LaurentPoly::asymmetry() const {
  double worst = 0.0;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i + 1 < n_; ++i) {
      Exponent s = e;
      std::swap(s[i], s[i + 1]);
      worst = std::max(worst, std::abs(c - coefficient(s)));
    }
  }
  return worst;
}

double LaurentPoly::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& kv : terms_) m = std::max(m, std::abs(kv.second));
  return m;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.n_ != n_) throw DomainError("LaurentPoly: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.n_ != n_) throw DomainError("LaurentPoly: variable count mismatch");
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(cplx s) {
  if (s == cplx(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(cplx s, LaurentPoly a) { return a *= s; }

double max_coefficient_difference(const LaurentPoly& a, const LaurentPoly& b) {
  double worst = 0.0;
  for (const auto& [e, c] : a.terms()) worst = std::max(worst, std::abs(c - b.coefficient(e)));
  for (const auto& [e, c] : b.terms()) worst = std::max(worst, std::abs(c - a.coefficient(e)));
  return worst;
}

LaurentPoly monomial_symmetric(const Exponent& nu) {
  LaurentPoly p(static_cast<int>(nu.size()));
  Exponent e = nu;
  std::sort(e.begin(), e.end());
  do {
    p.add(e, 1.0);
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

cplx monomial_symmetric_value(const Exponent& nu, std::span<const cplx> z) {
  Exponent e = nu;
  std::sort(e.begin(), e.end());
  cplx sum = 0.0;
  do {
    sum += monomial_value(e, z);
  } while (std::next_permutation(e.begin(), e.end()));
  return sum;
}

}  // namespace macdonald
