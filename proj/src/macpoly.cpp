#include "macdonald/macpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "macdonald/errors.hpp"
#include "macdonald/hcseries.hpp"
#include "macdonald/operators.hpp"

namespace macdonald {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Exponent Partition::padded(int n) const {
  Exponent e(parts_);
  while (!e.empty() && e.back() == 0 && static_cast<int>(e.size()) > n) e.pop_back();
  if (static_cast<int>(e.size()) > n) throw DomainError("Partition: more parts than variables");
  e.resize(n, 0);
  return e;
}

LaurentPoly macdonald_a1(int m, const QParams& p) {
  if (m < 0) throw DomainError("macdonald_a1: m must be nonnegative");
  const double q = p.q();
  const double k = p.k();
  LaurentPoly out(2);
  cplx c = 1.0;
  for (int j = 0; j <= m; ++j) {
    out.add({j, m - j}, c);
    const int i = j;
    c *= (1.0 - std::pow(q, k + i)) * (1.0 - std::pow(q, -m + i)) /
         ((1.0 - std::pow(q, 1 + i)) * (1.0 - std::pow(q, -m - k + 1 + i))) * (q / p.t());
  }
  return out;
}

cplx macdonald_eigenvalue(const Partition& lam, int n, int m, const QParams& p) {
  Exponent e = lam.padded(n);
  std::vector<cplx> gamma(e.rbegin(), e.rend());
  return eigenvalue_c(gamma, m, p);
}

LaurentPoly macdonald_poly(const Partition& lam, int n, const QParams& p, std::uint64_t seed) {
  const Exponent top = lam.padded(n);
  std::vector<Exponent> basis;
  for (const Exponent& nu : decreasing_vectors(n, 0, top.empty() ? 0 : top.front(), lam.size())) {
    if (dominated_by(nu, top)) basis.push_back(nu);
  }
  // basis[0] == top; the order is a linear extension of dominance.
  const std::size_t K = basis.size();
  std::vector<std::vector<cplx>> action(K, std::vector<cplx>(K, 0.0));
  for (std::size_t b = 0; b < K; ++b) {
    const LaurentPoly image = macdonald_apply_poly(monomial_symmetric(basis[b]), 1, p, 0, seed);
    for (std::size_t a = 0; a < K; ++a) action[a][b] = image.coefficient(basis[a]);
  }
  const cplx e = action[0][0];
  std::vector<cplx> c(K, 0.0);
  c[0] = 1.0;
  for (std::size_t a = 1; a < K; ++a) {
    const cplx gap = e - action[a][a];
    if (std::abs(gap) < kNondegeneracyTolerance * std::abs(e)) {
      throw ResonanceError("macdonald_poly: eigenvalue collision between dominance-comparable partitions");
    }
    cplx rhs = 0.0;
    for (std::size_t b = 0; b < a; ++b) {
      if (dominated_by(basis[a], basis[b])) rhs += action[a][b] * c[b];
    }
    c[a] = rhs / gap;
  }
  LaurentPoly out(n);
  for (std::size_t a = 0; a < K; ++a) {
    if (c[a] != cplx(0.0)) out += c[a] * monomial_symmetric(basis[a]);
  }
  return out;
}

double degeneration_check(int m, const QParams& p) {
  if (m < 0) throw DomainError("degeneration_check: m must be nonnegative");
  const double half = 0.5 * (m + p.k());
  const SpectralData s({cplx(-half), cplx(half)});
  const int N = m + 4;
  const HCSolution sol = solve_coefficients(s, p, N);
  const LaurentPoly expected = macdonald_a1(m, p);
  double worst = 0.0;
  for (int j = 0; j <= N; ++j) {
    const cplx a = sol.table[{j}];
    const cplx target = j <= m ? expected.coefficient({j, m - j}) : cplx(0.0);
    worst = std::max(worst, std::abs(a - target));
  }
  return worst;
}

}  // namespace macdonald
