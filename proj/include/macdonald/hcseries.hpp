#pragma once

// Series solutions of the Macdonald system in the zone |z_1| < ... < |z_n|:
//
//   phi(z) = z^{eta+rho} sum_p a(p) prod_i (z_i/z_{i+1})^{p_i},  a(0) = 1,
//
// with eta = w lambda. Coefficients come from the first order equation
// alone; the higher operators are checked, not imposed.

#include <optional>
#include <span>
#include <vector>

#include "macdonald/operators.hpp"
#include "macdonald/power_table.hpp"
#include "macdonald/qcore.hpp"

namespace macdonald {

struct HCSolution {
  SpectralData spectral;
  QParams params;
  std::vector<cplx> prefactor_exponent;  // eta + rho
  PowerTable table;
  // Empty when the leading coefficient hits a q-Gamma pole.
  std::optional<cplx> leading_coefficient_modeA;
  std::optional<cplx> leading_coefficient_modeB;

  int n() const noexcept { return spectral.n(); }
  int max_degree() const noexcept { return table.max_degree(); }
};

// 24, 16, 10 for n = 2, 3, 4 and 8 beyond.
int default_truncation(int n);

// Divisors below this fraction of |c^1| are treated as resonant.
inline constexpr double kNondegeneracyTolerance = 1e-10;

// Throws NondegeneracyError naming p when the divisor of a(p) vanishes.
HCSolution solve_coefficients(const SpectralData& s, const QParams& p, int N);

// Largest relative residual of the coefficient recursion over the table.
double recursion_residual(const HCSolution& sol);

// Leading coefficient of the solution normalised as a matrix element.
// Throws PoleError naming the offending root.
cplx leading_coefficient(const SpectralData& s, const QParams& p, XRMode mode);

struct Evaluation {
  cplx value;
  // Size of the next degree level, extrapolated geometrically.
  double tail_estimate;
  bool truncation_warning;
};

// Throws ZoneError unless |z_i/z_{i+1}| < 1 for every i.
Evaluation evaluate(const HCSolution& sol, std::span<const cplx> z, double tolerance = 1e-10);

// |D^m phi - c^m phi| / |c^m phi| at z.
double eigen_residual(const HCSolution& sol, int m, std::span<const cplx> z);

// z_i = q^{-3(i-1)}
std::vector<cplx> standard_points(int n, double q);

}  // namespace macdonald
