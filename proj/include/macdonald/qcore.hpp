#pragma once

// Scalar q-special functions: infinite products, q-Gamma, theta, double
// products, the bracket [v], contraction kernels and the basic
// hypergeometric series F_q.
//
// Conventions:
//   (z;q)_inf      = prod_{i>=0} (1 - z q^i)
//   Gamma_q(a)     = (q;q)_inf (1-q)^{1-a} / (q^a;q)_inf
//   Theta_q(z)     = (z;q)_inf (q/z;q)_inf (q;q)_inf
//   {z}            = prod_{i1,i2>=0} (1 - p1^{i1} p2^{i2} z)
//   [v]            = x^{v^2/r - v} Theta_{x^{2r}}(x^{2v})
//   F_q(a,b,c,z)   = sum_n (q^a;q)_n (q^b;q)_n / ((q;q)_n (q^c;q)_n) z^n
//
// Complex powers use the principal branch. q is real with 0 < q < 1 unless
// stated otherwise. Every function is pure.

#include <complex>
#include <cstddef>

namespace macdonald {

using cplx = std::complex<double>;

inline constexpr double kDefaultEps = 1e-14;
// |1 - q^{a+m}| below this marks a q-Gamma pole / terminating series.
inline constexpr double kPoleTolerance = 1e-10;

class QParams {
 public:
  // Throws DomainError unless 0 < q < 1, 0 < k < 1 and 0 < eps < 1e-6.
  QParams(double q, double k, double eps = kDefaultEps);

  double q() const noexcept { return q_; }
  double k() const noexcept { return k_; }
  // t = q^k; derived, never set independently.
  double t() const noexcept { return t_; }
  double eps() const noexcept { return eps_; }

 private:
  double q_;
  double k_;
  double t_;
  double eps_;
};

enum class XRMode {
  ModeA,  // r = 1/(1-k)
  ModeB,  // r = 1/k
};

// The (x, r) parametrisation with q = x^{2r}.
class XRParams {
 public:
  // Builds x, r from q, k according to `mode`.
  XRParams(const QParams& base, XRMode mode);
  // Raw construction: 0 < x < 1, r > 1. Mode is recorded but not checked
  // against any k.
  XRParams(double x, double r, XRMode mode);

  double x() const noexcept { return x_; }
  double r() const noexcept { return r_; }
  XRMode mode() const noexcept { return mode_; }
  // x^{2r}
  double base() const noexcept { return base_; }

 private:
  double x_;
  double r_;
  XRMode mode_;
  double base_;
};

// q^a for real q > 0 and complex a (principal branch).
cplx qpow(double q, cplx a);

// True when z lies within `tol` (in exponent units) of q^m for some integer m.
bool on_q_lattice(cplx z, double q, double tol = kPoleTolerance);

cplx qpochhammer_inf(cplx z, double q, double eps = kDefaultEps);
// Finite product (z;q)_n = prod_{i<n} (1 - z q^i).
cplx qpochhammer(cplx z, double q, int n);

cplx qgamma(cplx a, double q, double eps = kDefaultEps);

cplx theta(cplx z, double q, double eps = kDefaultEps);
// Theta_q(a)/Theta_q(b) evaluated through quasi-periodic reduction, so it
// stays finite when |a|, |b| are far outside the unit annulus.
cplx theta_ratio(cplx a, cplx b, double q, double eps = kDefaultEps);

cplx double_pochhammer(cplx z, double p1, double p2, double eps = kDefaultEps);

// g_1(z) = {x^2 z}{x^{2r+2n-2} z} / ({x^{2r} z}{x^{2n} z}), {.} over (x^{2r}, x^{2n}).
cplx g1(cplx z, double x, double r, int n, double eps = kDefaultEps);

// s(z) = (q^{(1+k)/2} z;q)_inf / (q^{(1-k)/2} z;q)_inf
cplx kernel_s(cplx z, const QParams& p);
// s(z) = (x^{2r-1} z;x^{2r})_inf / (x z;x^{2r})_inf; equals the q-form in ModeA.
cplx kernel_s(cplx z, const XRParams& xr, double eps = kDefaultEps);
// t(z) = (1-z) (q^{1-k} z;q)_inf / (q^k z;q)_inf
cplx kernel_t(cplx z, const QParams& p);
// t(z) = (1-z) (x^2 z;x^{2r})_inf / (x^{2r-2} z;x^{2r})_inf
cplx kernel_t(cplx z, const XRParams& xr, double eps = kDefaultEps);

cplx bracket_v(cplx v, const XRParams& xr, double eps = kDefaultEps);

cplx fq(cplx a, cplx b, cplx c, cplx z, double q, double eps = kDefaultEps);

// If q^a = q^{-m} for some integer m >= 0 (within kPoleTolerance), returns m;
// otherwise -1.
long terminating_degree(cplx a, double q);

// sum_m (q^a;q)_m / (q;q)_m z^m, which equals (q^a z;q)_inf / (z;q)_inf.
cplx qbinomial_series(cplx a, cplx z, double q, double eps = kDefaultEps);

}  // namespace macdonald
