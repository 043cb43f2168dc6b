#pragma once

// Contour integrals around the origin with Theta-ratio integrands, computed
// by summing residues at y = q^{(1-k)/2+m}, m >= 0, or by trapezoidal
// quadrature on a circle when the residue series converges too slowly.
// Contour integrals are taken against dy/(2 pi i y).

#include <array>
#include <functional>

#include "macdonald/qcore.hpp"

namespace macdonald {

// Residue of s(1/y)/y at y = q^{(1-k)/2+m}.
cplx kernel_residue(int m, const QParams& p);

// y^n Theta(q^{lambda21+(k+1)/2}/y)/Theta(q^{(1+k)/2}/y) s(1/y), lambda21 = -lam12
cplx moment_integrand(cplx y, int n_pow, cplx lam12, const QParams& p);

// Gamma_q(1-k)/[Gamma_q(l21+1)Gamma_q(l12+1-k)]
//   * Gamma_q(l21+k+n)Gamma_q(l21+1)/[Gamma_q(l21+k)Gamma_q(l21+n+1)] * q^{(1-k)n/2}
cplx moment_closed_form(int n_pow, cplx lam12, const QParams& p);

// Residue summation only; ConvergenceError when the series does not converge.
cplx moment_residue_sum(int n_pow, cplx lam12, const QParams& p);
// Double series obtained by expanding the Theta ratio binomially.
cplx moment_binomial_sum(int n_pow, cplx lam12, const QParams& p);
cplx moment_circle(int n_pow, cplx lam12, const QParams& p);

// Residue summation, falling back to the circle when the residue series
// converges slower than geometric ratio 0.995.
cplx residue_integral_moment(int n_pow, cplx lam12, const QParams& p);

// Integrand in u = y/z_1 with zeta = z_1/z_2:
//   Theta(q^{l21+(1+k)/2}/u)/Theta(q^{(1+k)/2}/u) s(1/u) s(u zeta)
cplx fq_integrand(cplx u, std::array<cplx, 2> lam, cplx zeta, const QParams& p);

// Gamma_q(1-k)/[Gamma_q(l12+1-k)Gamma_q(l21+1)] F_q(k, l21+k, l21+1, q^{1-k} z_1/z_2)
cplx integral_rep_fq_closed(std::array<cplx, 2> lam, cplx z1, cplx z2, const QParams& p);

cplx integral_rep_fq_residues(std::array<cplx, 2> lam, cplx z1, cplx z2, const QParams& p);
cplx integral_rep_fq_circle(std::array<cplx, 2> lam, cplx z1, cplx z2, const QParams& p);
// Requires |q^{1-k} z_1/z_2| < 1.
cplx integral_rep_fq(std::array<cplx, 2> lam, cplx z1, cplx z2, const QParams& p);

// (1/M) sum_j g(radius e^{2 pi i j/M}), the trapezoidal rule for the
// contour integral of g(y) dy/(2 pi i y) over |y| = radius.
cplx circle_average(const std::function<cplx(cplx)>& g, double radius, int points);

// Points needed for 1e-16 aliasing error on a circle between poles at radii
// inner < outer, capped at 65536.
int circle_points(double inner, double outer);

}  // namespace macdonald
