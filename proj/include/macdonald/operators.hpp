#pragma once

// Macdonald difference operators
//
//   D^m = t^{m(m+1)/2} sum_{|I|=m} prod_{s in I, j not in I}
//         (t z_s - z_j)/(z_s - z_j) T_{q,I}
//
// applied pointwise to black-box functions or to symmetric Laurent
// polynomials, together with the eigenvalues c^m_gamma.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "macdonald/laurent_poly.hpp"
#include "macdonald/qcore.hpp"

namespace macdonald {

// 0-based permutation; eta_i = lambda_{w[i]}.
using Permutation = std::vector<int>;

using PointFunction = std::function<cplx(std::span<const cplx>)>;

// Coincidence threshold relative to max |z_i|.
inline constexpr double kSingularTolerance = 1e-10;

class SpectralData {
 public:
  // Throws DomainError if n < 2, sizes differ, w is not a permutation or
  // |sum lambda| > 1e-12.
  SpectralData(std::vector<cplx> lambda, Permutation w);
  // Identity Weyl element.
  explicit SpectralData(std::vector<cplx> lambda);

  int n() const noexcept { return static_cast<int>(lambda_.size()); }
  const std::vector<cplx>& lambda() const noexcept { return lambda_; }
  const Permutation& w() const noexcept { return w_; }
  const std::vector<cplx>& eta() const noexcept { return eta_; }

  // delta = ((n-1)/2, (n-3)/2, ..., -(n-1)/2)
  std::vector<double> delta() const;
  // rho = k delta
  std::vector<double> rho(double k) const;
  // eta + rho
  std::vector<cplx> shifted_eta(double k) const;
  // lambda + rho (identity Weyl element)
  std::vector<cplx> shifted_lambda(double k) const;

  // Same lambda, w replaced by s_i w (0-based i swaps positions i, i+1).
  SpectralData transposed(int i) const;
  SpectralData with_w(Permutation w) const;

 private:
  std::vector<cplx> lambda_;
  Permutation w_;
  std::vector<cplx> eta_;
};

// All n! permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

// c^m_gamma = sum_{i_1<...<i_m} prod_s q^{gamma_{i_s}} t^{i_s} (1-based i_s).
cplx eigenvalue_c(std::span<const cplx> gamma, int m, double q, double t);
cplx eigenvalue_c(std::span<const cplx> gamma, int m, const QParams& p);
// (c^1, ..., c^n) at gamma = lambda + rho.
std::vector<cplx> eigenvalue_tuple(const SpectralData& s, const QParams& p);

// D^m f at z with raw (q, t). The (1/q, 1/t) variant goes through here.
cplx macdonald_apply_numeric(const PointFunction& f, int m, std::span<const cplx> z,
                             double q, double t);
cplx macdonald_apply_numeric(const PointFunction& f, int m, std::span<const cplx> z,
                             const QParams& p);

inline constexpr std::uint64_t kDefaultSampleSeed = 20240531;

// D^m P for a symmetric Laurent polynomial, recovered on the monomial
// symmetric basis from values at seeded random points. sample_count <= 0
// selects twice the basis size.
LaurentPoly macdonald_apply_poly(const LaurentPoly& poly, int m, const QParams& p,
                                 int sample_count = 0,
                                 std::uint64_t seed = kDefaultSampleSeed);

// |D^{n-1}(q,t) f - t^{n(n+1)/2} D^1(1/q,1/t) f| / |f| at z.
double duality_check(const PointFunction& f, std::span<const cplx> z, const QParams& p);

// Weakly decreasing integer vectors of length n with entries in [lo, hi]
// summing to total, in reverse lexicographic order (largest first).
std::vector<Exponent> decreasing_vectors(int n, int lo, int hi, int total);

// Partial-sum dominance: mu <= nu.
bool dominated_by(const Exponent& mu, const Exponent& nu);

}  // namespace macdonald
