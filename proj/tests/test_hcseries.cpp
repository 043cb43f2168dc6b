#include <doctest.h>

#include "macdonald/errors.hpp"
#include "macdonald/hcseries.hpp"
#include "oracles.hpp"

using namespace macdonald;
using oracle::rel;

namespace {

// Coefficient of x^p in F_q(k, d+k, d+1, q^{1-k} x).
cplx two_variable_coefficient(int p, cplx d, double q, double k) {
  const auto qp = [q](cplx e) { return std::exp(e * std::log(q)); };
  cplx c = 1.0;
  for (int j = 0; j < p; ++j) {
    c *= (1.0 - qp(k + double(j))) * (1.0 - qp(d + k + double(j))) /
         ((1.0 - std::pow(q, j + 1)) * (1.0 - qp(d + 1.0 + double(j))));
    c *= std::pow(q, 1.0 - k);
  }
  return c;
}

// First correction t^{a+1} [(1-t) q^{g_a} + (t-1) q^{g_b}] / (c - c(gamma + e_a - e_b))
// for a step along one ratio variable x_a = z_a/z_b with b = a+1. The extra
// t^a comes from the constant terms of the weights for the a earlier coordinates.
cplx first_step(const std::vector<cplx>& gamma, const std::vector<cplx>& target_gamma, int a,
                double q, double t) {
  const auto qp = [q](cplx e) { return std::exp(e * std::log(q)); };
  std::vector<cplx> shifted = gamma;
  shifted[a] += 1.0;
  shifted[a + 1] -= 1.0;
  cplx c_target = 0.0, c_shift = 0.0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    c_target += std::pow(t, double(i + 1)) * qp(target_gamma[i]);
    c_shift += std::pow(t, double(i + 1)) * qp(shifted[i]);
  }
  return std::pow(t, a + 1) * ((1.0 - t) * qp(gamma[a]) + (t - 1.0) * qp(gamma[a + 1])) / (c_target - c_shift);
}

}  // namespace

TEST_SUITE("hcseries") {

TEST_CASE("two-variable coefficients are F_q coefficients") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const QParams p(rng.uniform(0.2, 0.8), rng.uniform(0.1, 0.9));
    const double l = rng.uniform(-0.45, 0.45);
    for (const Permutation& w : all_permutations(2)) {
      const SpectralData s({l, -l}, w);
      const HCSolution sol = solve_coefficients(s, p, 30);
      const cplx d = s.eta()[0] - s.eta()[1];
      const auto gamma = s.shifted_eta(p.k());
      CHECK(rel(sol.table[{1}], first_step(gamma, s.shifted_lambda(p.k()), 0, p.q(), p.t())) < 1e-12);
      double worst = 0.0;
      for (int j = 0; j <= 30; ++j) {
        const cplx expected = two_variable_coefficient(j, d, p.q(), p.k());
        worst = std::max(worst, std::abs(sol.table[{j}] - expected) / std::max(1.0, std::abs(expected)));
      }
      CHECK(worst < 1e-11);
      CHECK(recursion_residual(sol) < 1e-12);
    }
  }
}

TEST_CASE("three-variable first coefficients") {
  const QParams p(0.5, 0.4);
  const SpectralData s({0.31, -0.11, -0.20});
  const HCSolution sol = solve_coefficients(s, p, 4);
  const auto gamma = s.shifted_eta(p.k());
  const auto target = s.shifted_lambda(p.k());
  CHECK(rel(sol.table[{1, 0}], first_step(gamma, target, 0, p.q(), p.t())) < 1e-12);
  CHECK(rel(sol.table[{0, 1}], first_step(gamma, target, 1, p.q(), p.t())) < 1e-12);
  CHECK(sol.table[{0, 0}] == cplx(1.0));
  CHECK(recursion_residual(sol) < 1e-12);
}

TEST_CASE("evaluation") {
  const QParams p(0.5, 0.4);
  const double q = p.q(), k = p.k();
  const SpectralData s({0.3, -0.3});
  const HCSolution zero = solve_coefficients(s, p, 0);
  const std::vector<cplx> z{1.0, std::pow(q, -2.0)};
  const cplx prefactor = std::pow(z[1], -0.3 - k / 2);
  CHECK(rel(evaluate(zero, z).value, prefactor) < 1e-14);

  const HCSolution sol = solve_coefficients(s, p, 24);
  const cplx expected = prefactor * oracle::fq(k, 0.6 + k, 1.6, std::pow(q, 1.0 - k) * z[0] / z[1], q, 80);
  const Evaluation e = evaluate(sol, z);
  CHECK(rel(e.value, expected) < 1e-13);
  CHECK_FALSE(e.truncation_warning);

  CHECK_THROWS_AS(evaluate(sol, std::vector<cplx>{2.0, 1.0}), ZoneError);
  CHECK_THROWS_AS(evaluate(sol, std::vector<cplx>{1.0, 1.0}), ZoneError);
  CHECK_THROWS_AS(evaluate(sol, std::vector<cplx>{1.0, 2.0, 3.0}), DomainError);
}

TEST_CASE("tail estimate bounds the truncation error") {
  const QParams p(0.5, 0.4);
  const SpectralData s({0.31, -0.11, -0.20});
  const HCSolution big = solve_coefficients(s, p, 20);
  for (int N : {4, 8, 12, 16}) {
    const HCSolution sol = solve_coefficients(s, p, N);
    for (double scale : {2.0, 3.0}) {
      const std::vector<cplx> z{1.0, std::pow(p.q(), -scale), std::pow(p.q(), -2 * scale)};
      const Evaluation e = evaluate(sol, z);
      const Evaluation ref = evaluate(big, z);
      CHECK(std::abs(e.value - ref.value) <= 2.0 * e.tail_estimate + 1e-15 * std::abs(ref.value));
    }
  }
}

TEST_CASE("eigen-residuals for every operator and Weyl element") {
  const QParams p(0.5, 0.4);
  oracle::Rng rng(32);
  for (int n = 2; n <= 4; ++n) {
    std::vector<cplx> lam(n);
    cplx sum = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
      lam[i] = rng.uniform(-0.45, 0.45);
      sum += lam[i];
    }
    lam[n - 1] = -sum;
    const auto z = standard_points(n, p.q());
    double worst = 0.0;
    for (const Permutation& w : all_permutations(n)) {
      const HCSolution sol = solve_coefficients(SpectralData(lam, w), p, default_truncation(n));
      for (int m = 1; m <= n; ++m) worst = std::max(worst, eigen_residual(sol, m, z));
    }
    CHECK(worst < (n < 4 ? 1e-10 : 1e-8));
  }
}

TEST_CASE("leading coefficients") {
  const QParams p(0.5, 0.4);
  const double q = p.q(), k = p.k();
  const SpectralData s3({0.31, -0.11, -0.20});
  CHECK(rel(leading_coefficient(s3, p, XRMode::ModeA), -0.04596938648569128161902290208) < 1e-12);

  const SpectralData s2({0.27, -0.27});
  const double d = 0.54;
  const cplx modeA = -std::pow(q, d * (d + k) / 2) * oracle::qgamma(1 - k, q) /
                     (oracle::qgamma(d + 1, q) * oracle::qgamma(-d + 1 - k, q));
  const cplx modeB = -std::pow(q, d * (d + 1 - k) / 2) * oracle::qgamma(k, q) /
                     (oracle::qgamma(d + 1, q) * oracle::qgamma(-d + k, q));
  CHECK(rel(leading_coefficient(s2, p, XRMode::ModeA), modeA) < 1e-12);
  CHECK(rel(leading_coefficient(s2, p, XRMode::ModeB), modeB) < 1e-12);

  const SpectralData pole({-0.5, 0.5});
  CHECK_THROWS_AS(leading_coefficient(pole, p, XRMode::ModeA), PoleError);
  try {
    leading_coefficient(pole, p, XRMode::ModeA);
  } catch (const PoleError& e) {
    CHECK(std::string(e.what()).find("e_1 - e_2") != std::string::npos);
  }
  const HCSolution sol = solve_coefficients(pole, p, 0);
  CHECK_FALSE(sol.leading_coefficient_modeA.has_value());
  CHECK_FALSE(sol.leading_coefficient_modeB.has_value());
}

TEST_CASE("resonant spectral data") {
  const QParams p(0.5, 0.4);
  const SpectralData s({0.5, -0.5}, {1, 0});
  CHECK_NOTHROW(solve_coefficients(s, p, 0));
  try {
    solve_coefficients(s, p, 4);
    FAIL("expected NondegeneracyError");
  } catch (const NondegeneracyError& e) {
    CHECK(e.multi_index() == Exponent{1});
  }
  CHECK_THROWS_AS(solve_coefficients(SpectralData({0.3, -0.3}), p, -1), DomainError);
}

TEST_CASE("truncation defaults and standard points") {
  CHECK(default_truncation(2) == 24);
  CHECK(default_truncation(3) == 16);
  CHECK(default_truncation(4) == 10);
  CHECK(default_truncation(6) == 8);
  const auto z = standard_points(3, 0.5);
  CHECK(z[0] == cplx(1.0));
  CHECK(z[1] == cplx(8.0));
  CHECK(z[2] == cplx(64.0));
}

}  // TEST_SUITE
