#pragma once

// Connection between asymptotic zones.
//
// For the zone swap z_i <-> z_{i+1} the series solutions satisfy
//
//   phi_w(z) = C1(w) phi_w(s_i z) + C2(w) phi_{s_i w}(s_i z)
//
// where s_i z swaps the coordinates i and i+1, so that s_i z lies in the
// standard zone once |z_{i+1}| < |z_i|. With zeta = z_i/z_{i+1},
// d = eta_i - eta_{i+1}:
//
//   C1 = Theta(q^k)/Theta(q^{-d}) Theta(q^{-d}/zeta)/Theta(q^k/zeta) zeta^{d+k}
//   C2 = q^{kd} Theta(q^{d+k})/Theta(q^d) Theta(1/zeta)/Theta(q^k/zeta) zeta^k
//
// when phi_w carries the matrix-element leading coefficient (ModeA). For the
// Gamma-only normalisation of the two-variable case the factor q^{kd} drops.
// Powers of zeta use the principal branch; zeta on the negative real axis is
// rejected.

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "macdonald/hcseries.hpp"
#include "macdonald/operators.hpp"
#include "macdonald/qcore.hpp"

namespace macdonald {

enum class Normalization {
  LeadingCoefficient,  // phi scaled by the ModeA leading coefficient
  Hat,                 // phi scaled by the Gamma factors only
};

using Matrix2 = std::array<std::array<cplx, 2>, 2>;

struct ConnectionMatrix {
  int i;  // 1-based adjacent transposition
  Permutation w;
  cplx ratio;  // z_i / z_{i+1}
  // Row 0 expands phi_w(z), row 1 expands phi_{s_i w}(z), both over
  // {phi_w(s_i z), phi_{s_i w}(s_i z)}.
  Matrix2 entries;
};

// (lhs, rhs) of the two-term continuation of F_q(a,b,c,z) into F_q series
// at q^{c+1-a-b}/z. Throws ZoneError unless every non-terminating series
// involved converges.
std::pair<cplx, cplx> fq_connection(cplx a, cplx b, cplx c, cplx z, const QParams& p);

// Two-variable solution with Gamma-only normalisation:
//   Gamma_q(1-k)/[Gamma_q(l21+1-k)Gamma_q(l12+1)] z1^{l1+k/2} z2^{l2-k/2}
//   F_q(k, l12+k, l12+1, q^{1-k} z1/z2)
cplx fhat(std::array<cplx, 2> lam, cplx z1, cplx z2, const QParams& p);

// (f^(lam; z1, z2), its continuation through f^ at (z2, z1)); requires
// q^{1-k} < |z1/z2| < q^{k-1}.
std::pair<cplx, cplx> fhat_continuation(std::array<cplx, 2> lam, cplx z1, cplx z2,
                                        const QParams& p);

// (C1, C2) for phi_w across the i-th wall (1-based i) at ratio zeta.
std::pair<cplx, cplx> connection_coefficients(const SpectralData& s, int i, cplx zeta,
                                              const QParams& p,
                                              Normalization norm = Normalization::LeadingCoefficient);

ConnectionMatrix braid_matrix(const SpectralData& s, int i, std::span<const cplx> z,
                              const QParams& p,
                              Normalization norm = Normalization::LeadingCoefficient);

// phi_w(z) in ModeA normalisation, computed from the series at s_i z, i.e.
// the right hand side of the connection formula. s_i z must lie in the
// standard zone.
cplx continued_value(const SpectralData& s, int i, std::span<const cplx> z, const QParams& p, int N);

struct BoltzmannWeights {
  cplx mu_ij;
  cplx v;
  cplx w_same;
  cplx w_cross;
  cplx r1;
};

// r1 = z^{((r-1)/r)((n-1)/n)} g1(1/z)/g1(z), z = x^{2v}
// w_cross = r1 [v][mu-1]/([v-1][mu]),  w_same = r1 [v-mu][1]/([v-1][mu])
BoltzmannWeights boltzmann_w(cplx mu_ij, cplx v, const XRParams& xr, int n);

// [[w_same(mu), w_cross(mu)], [w_cross(-mu), w_same(-mu)]] at v.
Matrix2 boltzmann_matrix(cplx mu_ij, cplx v, const XRParams& xr, int n);

struct BraidReport {
  double double_crossing;  // max |M_i(z) M_i(s_i z) - I|
  double braid;            // max over i of the braid relation for i, i+1
  double far_commutation;  // |i-j| >= 2 relations
  double eigenvalue_spread;  // max |c^m(eta_w + rho) - c^m(lambda + rho)| over w, m
};

// Full n! x n! action of the adjacent transpositions on the solution basis.
BraidReport verify_braid_relations(const SpectralData& s, const QParams& p, std::span<const cplx> z);

}  // namespace macdonald
