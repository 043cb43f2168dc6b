#pragma once

// Pointwise operator identities used to cross-check the operator code:
// the kernel identity for the product Pi(z, y), conjugation by the
// Pochhammer-ratio kernel, and the gauge transformation t -> q/t.
// Each function returns |lhs - rhs| / |lhs|.

#include <span>

#include "macdonald/operators.hpp"

namespace macdonald {

// Pi(z, y) = prod_{i,j} (q^{(1+k)/2} z_i/y_j;q)_inf / (q^{(1-k)/2} z_i/y_j;q)_inf
cplx kernel_product(std::span<const cplx> z, std::span<const cplx> y, const QParams& p);

// D^1_z(q,t) Pi = t (t^{n+1} D^1_y(1/q,1/t) + 1) Pi with z of length n+1
// and y of length n.
double kernel_identity_residual(std::span<const cplx> z, std::span<const cplx> y,
                                const QParams& p);

// K(y) = prod_{l<s} (a;q)(1/a;q) / ((q^k a;q)(q^k/a;q)), a = y_l/y_s
cplx conjugation_kernel(std::span<const cplx> y, const QParams& p);

// sum_i T_i [prod_{j!=i} (y_i/t - y_j)/(y_i - y_j)] K f
//   = K t^{1-n} sum_i prod_{j!=i} (t y_i - y_j)/(y_i - y_j) T_i f
double conjugation_identity_residual(const PointFunction& f, std::span<const cplx> y,
                                     const QParams& p);

// G(z) = prod_{i<j} z_j^{1-2k} (q^k z_i/z_j;q)_inf / (q^{1-k} z_i/z_j;q)_inf
cplx gauge_factor(std::span<const cplx> z, const QParams& p);

// sum_i prod_{j!=i} (t z_i - z_j)/(z_i - z_j) T_i (G f)
//   = G sum_i prod_{j!=i} ((q/t) z_i - z_j)/(z_i - z_j) T_i f
double gauge_identity_residual(const PointFunction& f, std::span<const cplx> z, const QParams& p);

}  // namespace macdonald
