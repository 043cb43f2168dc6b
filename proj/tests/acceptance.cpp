// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "macdonald/continuation.hpp"
#include "macdonald/errors.hpp"
#include "macdonald/hcseries.hpp"
#include "macdonald/identities.hpp"
#include "macdonald/macpoly.hpp"
#include "macdonald/residues.hpp"
#include "oracles.hpp"

using namespace macdonald;
using oracle::rel;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

std::vector<cplx> random_lambda(oracle::Rng& rng, int n, double bound = 0.45) {
  std::vector<cplx> lam(n);
  cplx sum = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    lam[i] = rng.uniform(-bound, bound);
    sum += lam[i];
  }
  lam[n - 1] = -sum;
  return lam;
}

long double pochhammer(long double a, long double q, int j) {
  long double r = 1.0L;
  for (int i = 0; i < j; ++i) r *= 1.0L - a * std::pow(q, static_cast<long double>(i));
  return r;
}

Outcome two_variable_golden_polynomials() {
  oracle::Rng rng(1001);
  double worst = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    // t = q^k covers (0,1) as k ranges over (0,1).
    const QParams p(rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95));
    const long double q = p.q(), k = p.k(), t = std::pow(q, k);
    for (int m = 0; m <= 4; ++m) {
      const LaurentPoly a1 = macdonald_a1(m, p);
      for (int j = 0; j <= m; ++j) {
        const long double expected = pochhammer(t, q, j) * pochhammer(std::pow(q, -m), q, j) /
                                     (pochhammer(q, q, j) * pochhammer(std::pow(q, 1 - m - k), q, j)) *
                                     std::pow(q / t, static_cast<long double>(j));
        worst = std::max(worst, rel(a1.coefficient({j, m - j}), static_cast<double>(expected)));
      }
      worst = std::max(worst, a1.asymmetry());
    }
  }
  return {worst < 1e-12, fmt("max rel err %.2e", worst)};
}

Outcome eigenfunction_residuals() {
  const QParams p(0.5, 0.4);
  double worst2 = 0.0, worst3 = 0.0;
  const std::vector<std::vector<cplx>> lambdas{{0.27, -0.27}, {0.31, -0.11, -0.20}};
  for (const auto& lam : lambdas) {
    const int n = static_cast<int>(lam.size());
    const auto z = standard_points(n, p.q());
    for (const Permutation& w : all_permutations(n)) {
      const HCSolution sol = solve_coefficients(SpectralData(lam, w), p, n == 2 ? 24 : 16);
      for (int m = 1; m <= n; ++m) {
        double& worst = n == 2 ? worst2 : worst3;
        worst = std::max(worst, eigen_residual(sol, m, z));
      }
    }
  }
  return {worst2 < 1e-8 && worst3 < 1e-6, fmt("n=2 max %.2e, n=3 max %.2e", worst2, worst3)};
}

Outcome series_coefficients_match_fq() {
  oracle::Rng rng(1003);
  double worst = 0.0;
  for (int draw = 0; draw < 10; ++draw) {
    const QParams p(rng.uniform(0.2, 0.8), rng.uniform(0.1, 0.9));
    const double l = rng.uniform(-0.45, 0.45);
    for (const Permutation& w : all_permutations(2)) {
      const SpectralData s({l, -l}, w);
      const HCSolution sol = solve_coefficients(s, p, 30);
      const cplx d = s.eta()[0] - s.eta()[1];
      const double q = p.q(), k = p.k();
      const auto qp = [q](cplx e) { return std::exp(e * std::log(q)); };
      cplx expected = 1.0;
      for (int j = 0; j <= 30; ++j) {
        worst = std::max(worst, std::abs(sol.table[{j}] - expected) / std::max(1.0, std::abs(expected)));
        expected *= (1.0 - qp(k + double(j))) * (1.0 - qp(d + k + double(j))) /
                    ((1.0 - std::pow(q, j + 1)) * (1.0 - qp(d + 1.0 + double(j)))) * std::pow(q, 1.0 - k);
      }
    }
  }
  return {worst < 1e-12, fmt("max err %.2e over p <= 30", worst)};
}

Outcome leading_coefficients() {
  oracle::Rng rng(1004);
  double worst = 0.0;
  for (int n = 2; n <= 3; ++n) {
    for (int draw = 0; draw < 50; ++draw) {
      const QParams p(rng.uniform(0.2, 0.8), rng.uniform(0.1, 0.9));
      const double q = p.q(), k = p.k();
      const auto perms = all_permutations(n);
      const SpectralData s(random_lambda(rng, n), perms[rng.integer(0, static_cast<int>(perms.size()) - 1)]);
      cplx a = (n * (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
      cplx b = a;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const cplx d = s.eta()[i] - s.eta()[j];
          a *= std::exp(0.5 * d * (d + k) * std::log(q)) * oracle::qgamma(1.0 - k, q) /
               (oracle::qgamma(d + 1.0, q) * oracle::qgamma(-d + 1.0 - k, q));
          b *= std::exp(0.5 * d * (d + 1.0 - k) * std::log(q)) * oracle::qgamma(k, q) /
               (oracle::qgamma(d + 1.0, q) * oracle::qgamma(-d + k, q));
        }
      }
      worst = std::max(worst, rel(leading_coefficient(s, p, XRMode::ModeA), a));
      worst = std::max(worst, rel(leading_coefficient(s, p, XRMode::ModeB), b));
    }
  }
  return {worst < 1e-12, fmt("max rel err %.2e over 100 draws", worst)};
}

Outcome connection_formulas() {
  oracle::Rng rng(1005);
  double worst_fq = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const QParams p(rng.uniform(0.2, 0.8), 0.5);
    double a, b;
    do {
      a = rng.uniform(0.1, 0.9);
      b = rng.uniform(0.1, 0.9);
    } while (std::abs(a - b) <= 0.05);
    const double c = rng.uniform(1.05, 1.9);
    // Inner 80% of the log-annulus q^{c+1-a-b} < |z| < 1.
    const double lo = (c + 1.0 - a - b) * std::log(p.q());
    const double radius = std::exp(rng.uniform(0.9 * lo, 0.1 * lo));
    const cplx z = std::polar(radius, rng.uniform(-M_PI, M_PI));
    const auto [lhs, rhs] = fq_connection(a, b, c, z, p);
    worst_fq = std::max(worst_fq, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
  }

  double worst_zone = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const QParams p(rng.uniform(0.3, 0.7), rng.uniform(0.2, 0.8));
    const double q = p.q(), k = p.k();
    const double l = rng.uniform(-0.45, 0.45);
    const double d = 2 * l;
    // 1 < |z1/z2| < q^{k-1}: phi continued from the swapped zone versus the
    // direct F_q series, which still converges there.
    const double ratio = std::exp(rng.uniform(0.1, 0.8) * (k - 1.0) * std::log(q));
    const std::vector<cplx> z{ratio * std::polar(1.0, rng.uniform(-0.5, 0.5)), 1.0};
    const cplx direct = -std::exp(0.5 * d * (d + k) * std::log(q)) * fhat({l, -l}, z[0], z[1], p);
    // The swapped-zone series decays like (q^{1-k}/|z1/z2|)^N.
    const double decay = std::pow(q, 1.0 - k) / ratio;
    const int N = static_cast<int>(std::ceil(std::log(1e-14) / std::log(decay))) + 10;
    worst_zone = std::max(worst_zone, rel(continued_value(SpectralData({l, -l}), 1, z, p, N), direct));
  }
  return {worst_fq < 1e-9 && worst_zone < 1e-8,
          fmt("F_q continuation max %.2e, dual-zone max %.2e", worst_fq, worst_zone)};
}

Outcome braid_properties() {
  oracle::Rng rng(1006);
  const QParams p(0.5, 0.4);
  double crossing = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const std::vector<cplx> z{std::polar(rng.uniform(0.3, 3.0), rng.uniform(-2.0, 2.0)), 1.0};
    crossing = std::max(crossing, verify_braid_relations(SpectralData(random_lambda(rng, 2)), p, z).double_crossing);
  }
  double braid = 0.0;
  for (int draw = 0; draw < 5; ++draw) {
    const std::vector<cplx> z{1.0, std::polar(rng.uniform(1.2, 2.0), rng.uniform(-1.0, 1.0)),
                              std::polar(rng.uniform(2.5, 4.0), rng.uniform(-1.0, 1.0))};
    braid = std::max(braid, verify_braid_relations(SpectralData(random_lambda(rng, 3)), p, z).braid);
  }
  return {crossing < 1e-8 && braid < 1e-6, fmt("double crossing %.2e, braid %.2e", crossing, braid)};
}

Outcome residue_oracles() {
  oracle::Rng rng(1007);
  double worst_moment = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const QParams p(rng.uniform(0.2, 0.8), rng.uniform(0.1, 0.9));
    const double lam12 = rng.uniform(p.k() - 0.95, p.k() - 0.05);
    for (int n_pow = 0; n_pow <= 8; ++n_pow) {
      worst_moment = std::max(worst_moment, rel(moment_residue_sum(n_pow, lam12, p), moment_closed_form(n_pow, lam12, p)));
    }
  }
  double worst_fq = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const QParams p(rng.uniform(0.2, 0.8), rng.uniform(0.1, 0.9));
    const double q = p.q(), k = p.k();
    const double l = rng.uniform(-0.45, 0.45);
    const std::array<cplx, 2> lam{l, -l};
    const cplx zeta = std::polar(rng.uniform(0.05, 0.8), rng.uniform(-M_PI, M_PI));
    const double l12 = 2 * l;
    const cplx expected = oracle::qgamma(1.0 - k, q) /
                          (oracle::qgamma(l12 + 1.0 - k, q) * oracle::qgamma(-l12 + 1.0, q)) *
                          oracle::fq(k, -l12 + k, -l12 + 1.0, std::pow(q, 1.0 - k) * zeta, q, 400);
    worst_fq = std::max(worst_fq, rel(integral_rep_fq(lam, zeta, 1.0, p), expected));
  }
  return {worst_moment < 1e-10 && worst_fq < 1e-10,
          fmt("moment integrals max %.2e, F_q integral max %.2e", worst_moment, worst_fq)};
}

Outcome identity_suite() {
  oracle::Rng rng(1008);
  double worst = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const QParams p(rng.uniform(0.2, 0.8), rng.uniform(0.1, 0.9));
    const double q = p.q();

    const double a = rng.uniform(0.1, 0.5), b = rng.uniform(0.1, 0.5), c = a + b + rng.uniform(0.2, 1.0);
    const cplx gauss = qgamma(c, q) * qgamma(c - a - b, q) / (qgamma(c - a, q) * qgamma(c - b, q));
    worst = std::max(worst, rel(fq(a, b, c, std::pow(q, c - a - b), q), gauss));

    const cplx s(rng.uniform(0.1, 3.0), rng.uniform(-1.0, 1.0));
    worst = std::max(worst, rel(qgamma(s + 1.0, q), (1.0 - qpow(q, s)) / (1.0 - q) * qgamma(s, q)));

    const cplx z = rng.on_annulus(0.3, 3.0);
    worst = std::max(worst, rel(theta(q * z, q), -theta(z, q) / z));
    worst = std::max(worst, rel(theta(1.0 / z, q), -theta(z, q) / z));

    const XRParams xr(rng.uniform(0.5, 0.95), rng.uniform(1.2, 4.0), XRMode::ModeA);
    const cplx v(rng.uniform(-1.0, 1.0), rng.uniform(-0.3, 0.3));
    worst = std::max(worst, rel(bracket_v(v + xr.r(), xr), -bracket_v(v, xr)));

    const auto f = [](std::span<const cplx> y) {
      cplx acc = y[0] / y[y.size() - 1];
      for (std::size_t i = 0; i < y.size(); ++i) acc += double(i + 1) * std::pow(y[i], int(i + 1));
      return acc;
    };
    for (int n = 2; n <= 3; ++n) {
      std::vector<cplx> pt(n), big(n);
      for (int i = 0; i < n; ++i) pt[i] = rng.on_annulus(1.0, 2.0);
      for (int i = 0; i < n; ++i) big[i] = 3.0 * rng.on_annulus(1.0, 2.0);
      std::vector<cplx> small(n + 1);
      for (auto& v0 : small) v0 = 0.3 * rng.on_annulus(1.0, 2.0);
      worst = std::max(worst, kernel_identity_residual(small, big, p));
      worst = std::max(worst, conjugation_identity_residual(f, pt, p));
      worst = std::max(worst, gauge_identity_residual(f, pt, p));
    }
  }
  return {worst < 1e-9, fmt("max residual %.2e", worst)};
}

Outcome duality() {
  const QParams p(0.5, 0.4);
  double worst = 0.0;
  const std::vector<std::vector<cplx>> lambdas{{0.27, -0.27}, {0.31, -0.11, -0.20}};
  for (const auto& lam : lambdas) {
    const int n = static_cast<int>(lam.size());
    for (const Permutation& w : all_permutations(n)) {
      const HCSolution sol = solve_coefficients(SpectralData(lam, w), p, default_truncation(n));
      const PointFunction phi = [&sol](std::span<const cplx> v) { return evaluate(sol, v).value; };
      worst = std::max(worst, duality_check(phi, standard_points(n, p.q()), p));
    }
  }
  return {worst < 1e-7, fmt("max residual %.2e", worst)};
}

Outcome degeneration() {
  oracle::Rng rng(1010);
  double worst = 0.0;
  for (int draw = 0; draw < 5; ++draw) {
    const QParams p(rng.uniform(0.3, 0.7), rng.uniform(0.15, 0.85));
    for (int m = 0; m <= 4; ++m) worst = std::max(worst, degeneration_check(m, p));
  }
  return {worst < 1e-10, fmt("max coefficient err %.2e", worst)};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double time_limit;  // seconds; <= 0 means none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1 two-variable golden polynomials", two_variable_golden_polynomials, 1.0},
      {"AC2 eigenfunction residuals", eigenfunction_residuals, 60.0},
      {"AC3 series coefficients equal F_q coefficients", series_coefficients_match_fq, 1.0},
      {"AC4 leading coefficients", leading_coefficients, 0.0},
      {"AC5 connection formulas", connection_formulas, 0.0},
      {"AC6 braid properties", braid_properties, 120.0},
      {"AC7 residue oracles", residue_oracles, 0.0},
      {"AC8 identity suite", identity_suite, 0.0},
      {"AC9 duality", duality, 0.0},
      {"AC10 degeneration to polynomials", degeneration, 0.0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && seconds > c.time_limit) {
      outcome.pass = false;
      outcome.detail += fmt(", over time limit %.0f s", c.time_limit);
    }
    if (!outcome.pass) ++failed;
    std::printf("[%s] %-48s %s (%.3f s)\n", outcome.pass ? "PASS" : "FAIL", c.name, outcome.detail.c_str(), seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
