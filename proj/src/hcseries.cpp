#include "macdonald/hcseries.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

// W_i = prod_{j != i} (t z_i - z_j)/(z_i - z_j) expanded in the ratio
// variables x_l = z_l/z_{l+1}:
//   j > i: 1 + (1-t) sum_m (z_i/z_j)^m,   j < i: t + (t-1) sum_m (z_j/z_i)^m.
std::vector<PowerTable> weight_tables(int n, double t, int N) {
  std::vector<PowerTable> out;
  for (int i = 0; i < n; ++i) {
    PowerTable w(n - 1, N);
    w[Exponent(n - 1, 0)] = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const int lo = std::min(i, j);
      const int hi = std::max(i, j);
      const int step = hi - lo;
      PowerTable factor(n - 1, N);
      factor[Exponent(n - 1, 0)] = j > i ? 1.0 : t;
      const cplx tail = j > i ? 1.0 - t : t - 1.0;
      for (int m = 1; m * step <= N; ++m) {
        Exponent e(n - 1, 0);
        for (int l = lo; l < hi; ++l) e[l] = m;
        factor[e] = tail;
      }
      w = multiply_truncated(w, factor);
    }
    out.push_back(std::move(w));
  }
  return out;
}

// q^{(eta+rho+kappa(p))_i} for every table entry, kappa(p)_i = p_i - p_{i-1}.
std::vector<std::vector<cplx>> shifted_powers(const HCSolution& sol) {
  const int n = sol.n();
  const double q = sol.params.q();
  std::vector<std::vector<cplx>> out(sol.table.size(), std::vector<cplx>(n));
  for (std::size_t pos = 0; pos < sol.table.size(); ++pos) {
    const Exponent& p = sol.table.index(pos);
    for (int i = 0; i < n; ++i) {
      const int upper = i < n - 1 ? p[i] : 0;
      const int lower = i > 0 ? p[i - 1] : 0;
      out[pos][i] = qpow(q, sol.prefactor_exponent[i] + static_cast<double>(upper - lower));
    }
  }
  return out;
}

struct RecursionTerms {
  cplx divisor;
  cplx rhs;
};

RecursionTerms recursion_terms(const HCSolution& sol, const std::vector<PowerTable>& weights,
                               const std::vector<std::vector<cplx>>& powers, cplx target,
                               std::size_t pos) {
  const int n = sol.n();
  const double t = sol.params.t();
  const Exponent& P = sol.table.index(pos);
  cplx c1 = 0.0;
  for (int i = 0; i < n; ++i) c1 += std::pow(t, i + 1) * powers[pos][i];
  cplx rhs = 0.0;
  Exponent diff(n - 1);
  for (int i = 0; i < n; ++i) {
    const PowerTable& w = weights[i];
    for (std::size_t r = 1; r < w.size(); ++r) {
      if (w.at(r) == cplx(0.0)) continue;
      const Exponent& e = w.index(r);
      bool fits = true;
      for (int l = 0; l < n - 1; ++l) {
        diff[l] = P[l] - e[l];
        if (diff[l] < 0) fits = false;
      }
      if (!fits) continue;
      const long prev = sol.table.position(diff);
      rhs += w.at(r) * powers[prev][i] * sol.table.at(prev);
    }
  }
  return {target - c1, t * rhs};
}

}  // namespace

int default_truncation(int n) {
  switch (n) {
    case 2: return 24;
    case 3: return 16;
    case 4: return 10;
    default: return 8;
  }
}

HCSolution solve_coefficients(const SpectralData& s, const QParams& p, int N) {
  if (N < 0) throw DomainError("solve_coefficients: truncation degree must be nonnegative");
  const int n = s.n();
  HCSolution sol{s, p, s.shifted_eta(p.k()), PowerTable(n - 1, N), std::nullopt, std::nullopt};
  try {
    sol.leading_coefficient_modeA = leading_coefficient(s, p, XRMode::ModeA);
  } catch (const PoleError&) {
  }
  try {
    sol.leading_coefficient_modeB = leading_coefficient(s, p, XRMode::ModeB);
  } catch (const PoleError&) {
  }

  const std::vector<PowerTable> weights = weight_tables(n, p.t(), N);
  const std::vector<std::vector<cplx>> powers = shifted_powers(sol);
  const std::vector<cplx> gamma = s.shifted_lambda(p.k());
  const cplx target = eigenvalue_c(gamma, 1, p);

  sol.table.at(0) = 1.0;
  for (std::size_t pos = 1; pos < sol.table.size(); ++pos) {
    const RecursionTerms terms = recursion_terms(sol, weights, powers, target, pos);
    if (std::abs(terms.divisor) < kNondegeneracyTolerance * std::abs(target)) {
      const Exponent& P = sol.table.index(pos);
      std::string label;
      for (int v : P) label += (label.empty() ? "" : ",") + std::to_string(v);
      throw NondegeneracyError("solve_coefficients: resonant divisor at p = (" + label + ")", P);
    }
    sol.table.at(pos) = terms.rhs / terms.divisor;
  }
  return sol;
}

double recursion_residual(const HCSolution& sol) {
  const std::vector<PowerTable> weights = weight_tables(sol.n(), sol.params.t(), sol.max_degree());
  const std::vector<std::vector<cplx>> powers = shifted_powers(sol);
  const std::vector<cplx> gamma = sol.spectral.shifted_lambda(sol.params.k());
  const cplx target = eigenvalue_c(gamma, 1, sol.params);
  double worst = std::abs(sol.table.at(0) - 1.0);
  for (std::size_t pos = 1; pos < sol.table.size(); ++pos) {
    const RecursionTerms terms = recursion_terms(sol, weights, powers, target, pos);
    const cplx lhs = terms.divisor * sol.table.at(pos);
    const double scale = std::max({std::abs(target * sol.table.at(pos)), std::abs(terms.rhs), 1e-300});
    worst = std::max(worst, std::abs(lhs - terms.rhs) / scale);
  }
  return worst;
}

cplx leading_coefficient(const SpectralData& s, const QParams& p, XRMode mode) {
  const int n = s.n();
  const double q = p.q();
  const double k = p.k();
  const auto& eta = s.eta();
  cplx product = (n * (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const cplx d = eta[i] - eta[j];
      try {
        if (mode == XRMode::ModeA) {
          product *= qpow(q, 0.5 * d * (d + k)) * qgamma(1.0 - k, q, p.eps()) /
                     (qgamma(d + 1.0, q, p.eps()) * qgamma(-d + 1.0 - k, q, p.eps()));
        } else {
          product *= qpow(q, 0.5 * d * (d + 1.0 - k)) * qgamma(k, q, p.eps()) /
                     (qgamma(d + 1.0, q, p.eps()) * qgamma(-d + k, q, p.eps()));
        }
      } catch (const PoleError& e) {
        throw PoleError("leading_coefficient: q-Gamma pole for the root e_" + std::to_string(i + 1) +
                            " - e_" + std::to_string(j + 1) + " (" + e.what() + ")",
                        e.offending_integer());
      }
    }
  }
  return product;
}

Evaluation evaluate(const HCSolution& sol, std::span<const cplx> z, double tolerance) {
  const int n = sol.n();
  if (static_cast<int>(z.size()) != n) throw DomainError("evaluate: point has wrong dimension");
  const int N = sol.max_degree();
  std::vector<std::vector<cplx>> powers(n - 1, std::vector<cplx>(N + 1));
  double max_ratio = 0.0;
  for (int i = 0; i < n; ++i) {
    if (z[i] == cplx(0.0)) throw ZoneError("evaluate: zero coordinate");
  }
  for (int i = 0; i + 1 < n; ++i) {
    const cplx x = z[i] / z[i + 1];
    if (!(std::abs(x) < 1.0)) {
      throw ZoneError("evaluate: |z_" + std::to_string(i + 1) + "/z_" + std::to_string(i + 2) +
                      "| >= 1 is outside the convergence zone");
    }
    max_ratio = std::max(max_ratio, std::abs(x));
    powers[i][0] = 1.0;
    for (int m = 1; m <= N; ++m) powers[i][m] = powers[i][m - 1] * x;
  }
  cplx log_prefactor = 0.0;
  for (int i = 0; i < n; ++i) log_prefactor += sol.prefactor_exponent[i] * std::log(z[i]);
  const cplx prefactor = std::exp(log_prefactor);

  cplx sum = 0.0;
  std::vector<double> level(N + 1, 0.0);
  for (std::size_t pos = 0; pos < sol.table.size(); ++pos) {
    const Exponent& p = sol.table.index(pos);
    cplx term = sol.table.at(pos);
    int degree = 0;
    for (int i = 0; i + 1 < n; ++i) {
      term *= powers[i][p[i]];
      degree += p[i];
    }
    sum += term;
    level[degree] += std::abs(term);
  }
  const cplx value = prefactor * sum;
  double last = level[N];
  if (N > 0) last = std::max(last, level[N - 1] * max_ratio);
  const double tail = std::abs(prefactor) * last * max_ratio / (1.0 - max_ratio);
  return {value, tail, tail > tolerance * std::abs(value)};
}

double eigen_residual(const HCSolution& sol, int m, std::span<const cplx> z) {
  const PointFunction phi = [&sol](std::span<const cplx> v) { return evaluate(sol, v).value; };
  const std::vector<cplx> gamma = sol.spectral.shifted_lambda(sol.params.k());
  const cplx c = eigenvalue_c(gamma, m, sol.params);
  const cplx value = phi(z);
  const cplx applied = macdonald_apply_numeric(phi, m, z, sol.params);
  return std::abs(applied - c * value) / std::abs(c * value);
}

std::vector<cplx> standard_points(int n, double q) {
  std::vector<cplx> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::pow(q, -3.0 * i);
  return z;
}

}  // namespace macdonald
