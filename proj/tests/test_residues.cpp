#include <doctest.h>

#include "macdonald/errors.hpp"
#include "macdonald/residues.hpp"
#include "oracles.hpp"

using namespace macdonald;
using oracle::rel;

namespace {

// (1/2 pi i) \oint f(y) dy on a small circle around y0.
cplx numeric_residue(const std::function<cplx(cplx)>& f, cplx y0, double radius) {
  const auto g = [&](cplx u) { return f(y0 + u) * u; };
  return circle_average(g, radius, 256);
}

}  // namespace

TEST_SUITE("residues") {

TEST_CASE("kernel residues") {
  const QParams p(0.5, 0.4);
  const double q = p.q(), k = p.k();
  CHECK(rel(kernel_residue(0, p), oracle::product(p.t(), q) / oracle::product(q, q)) < 1e-13);
  const auto f = [&](cplx y) { return kernel_s(1.0 / y, p) / y; };
  for (int m = 0; m <= 3; ++m) {
    const double y0 = std::pow(q, 0.5 * (1.0 - k) + m);
    const cplx numeric = numeric_residue(f, y0, 1e-3 * y0);
    CHECK(rel(kernel_residue(m, p), numeric) < 1e-9);
    if (m > 0) {
      CHECK(rel(kernel_residue(m, p) / kernel_residue(m - 1, p),
                (1.0 - std::pow(q, k - m)) / (1.0 - std::pow(q, -m))) < 1e-13);
    }
  }
}

TEST_CASE("moment integral: residues, binomial series, circle and closed form agree") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    const QParams p(rng.uniform(0.2, 0.7), rng.uniform(0.1, 0.9));
    const double lam12 = rng.uniform(p.k() - 0.95, p.k() - 0.05);
    for (int n_pow : {0, 1, 3}) {
      const cplx closed = moment_closed_form(n_pow, lam12, p);
      CHECK(rel(moment_residue_sum(n_pow, lam12, p), closed) < 1e-10);
      CHECK(rel(moment_binomial_sum(n_pow, lam12, p), closed) < 1e-10);
      CHECK(rel(moment_circle(n_pow, lam12, p), closed) < 1e-10);
      CHECK(rel(residue_integral_moment(n_pow, lam12, p), closed) < 1e-10);
    }
  }
}

TEST_CASE("moment integral outside the residue region") {
  const QParams p(0.5, 0.4);
  const double lam12 = 0.45;  // Re(lam21 + k + 0) < 0
  CHECK_THROWS_AS(moment_residue_sum(0, lam12, p), ConvergenceError);
  CHECK(rel(residue_integral_moment(0, lam12, p), moment_circle(0, lam12, p)) < 1e-15);
  CHECK_THROWS_AS(moment_binomial_sum(-1, 0.1, p), DomainError);
}

TEST_CASE("slowly converging residue series stay finite") {
  // Term ratios near 1 need a few thousand residues, past where q^{-m} overflows.
  const QParams p(0.8, 0.9);
  const double lam12 = p.k() - 0.02;
  CHECK(rel(moment_residue_sum(0, lam12, p), moment_closed_form(0, lam12, p)) < 1e-10);

  const QParams p2(0.478394, 0.894811);
  const std::array<cplx, 2> lam{0.429691, -0.429691};
  const cplx zeta = std::polar(0.5, 1.0);
  CHECK(rel(integral_rep_fq_residues(lam, zeta, 1.0, p2), integral_rep_fq_closed(lam, zeta, 1.0, p2)) < 1e-10);
}

TEST_CASE("contour shift across the first pole picks up its residue") {
  const QParams p(0.5, 0.4);
  const double q = p.q(), k = p.k();
  const double lam12 = -0.2;
  for (int n_pow : {0, 2}) {
    const auto g = [&](cplx y) { return moment_integrand(y, n_pow, lam12, p); };
    const double y0 = std::pow(q, 0.5 * (1.0 - k));
    const double theta_pole = std::pow(q, 0.5 * (1.0 + k));
    const cplx outer = circle_average(g, 1.0, circle_points(y0, 1.0 / y0));
    const cplx inner = circle_average(g, std::sqrt(y0 * theta_pole), circle_points(theta_pole, y0));
    const cplx residue = std::pow(y0, n_pow) * kernel_residue(0, p) *
                         theta_ratio(qpow(q, -lam12 + k), std::pow(q, k), q);
    CHECK(rel(outer - inner, residue) < 1e-10);
  }
}

TEST_CASE("Theta ratio in the integrand scales as a power under y -> q y") {
  const QParams p(0.45, 0.3);
  const double q = p.q(), k = p.k();
  const cplx l21(0.37, 0.1);
  oracle::Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const cplx y = rng.on_annulus(0.5, 2.0);
    const auto ratio = [&](cplx u) {
      return theta_ratio(qpow(q, l21 + 0.5 * (1.0 + k)) / u, std::pow(q, 0.5 * (1.0 + k)) / u, q);
    };
    CHECK(rel(ratio(q * y), qpow(q, l21) * ratio(y)) < 1e-12);
  }
}

TEST_CASE("integral representation of the two-variable F_q solution") {
  const QParams p(0.5, 0.4);
  const double q = p.q(), k = p.k();

  SUBCASE("residue route") {
    const std::array<cplx, 2> lam{-0.2, 0.2};
    for (cplx zeta : {cplx(0.2), cplx(0.3, 0.4), cplx(-0.1, 0.05)}) {
      const cplx closed = integral_rep_fq_closed(lam, zeta, 1.0, p);
      CHECK(rel(integral_rep_fq_residues(lam, zeta, 1.0, p), closed) < 1e-10);
      CHECK(rel(integral_rep_fq_circle(lam, zeta, 1.0, p), closed) < 1e-10);
      CHECK(rel(integral_rep_fq(lam, zeta, 1.0, p), closed) < 1e-10);
    }
  }

  SUBCASE("circle route") {
    const std::array<cplx, 2> lam{0.3, -0.3};
    CHECK_THROWS_AS(integral_rep_fq_residues(lam, 0.2, 1.0, p), ConvergenceError);
    const cplx closed = integral_rep_fq_closed(lam, 0.2, 1.0, p);
    CHECK(rel(integral_rep_fq(lam, 0.2, 1.0, p), closed) < 1e-10);
    const cplx gammas = oracle::qgamma(1.0 - k, q) / (oracle::qgamma(0.6 + 1.0 - k, q) * oracle::qgamma(-0.6 + 1.0, q));
    CHECK(rel(closed, gammas * oracle::fq(k, -0.6 + k, -0.6 + 1.0, std::pow(q, 1.0 - k) * 0.2, q, 80)) < 1e-12);
  }

  SUBCASE("ratio outside the unit disk") {
    const std::array<cplx, 2> lam{-0.1, 0.1};
    const cplx zeta = std::polar(1.25, 0.3);
    CHECK(rel(integral_rep_fq_circle(lam, zeta, 1.0, p), integral_rep_fq_closed(lam, zeta, 1.0, p)) < 1e-10);
    CHECK(rel(integral_rep_fq(lam, 2.0 * zeta, 2.0, p), integral_rep_fq_closed(lam, zeta, 1.0, p)) < 1e-10);
  }

  SUBCASE("z1 = 0 leaves the Gamma factors") {
    const std::array<cplx, 2> lam{-0.2, 0.2};
    const cplx gammas = oracle::qgamma(1.0 - k, q) / (oracle::qgamma(-0.4 + 1.0 - k, q) * oracle::qgamma(0.4 + 1.0, q));
    CHECK(rel(integral_rep_fq(lam, 0.0, 1.0, p), gammas) < 1e-12);
    CHECK(rel(integral_rep_fq_circle(lam, 0.0, 1.0, p), gammas) < 1e-12);
  }

  SUBCASE("domain") {
    const std::array<cplx, 2> lam{-0.2, 0.2};
    CHECK_THROWS_AS(integral_rep_fq(lam, 2.0, 1.0, p), DomainError);
    CHECK_THROWS_AS(integral_rep_fq(lam, 1.0, 0.0, p), DomainError);
  }
}

TEST_CASE("circle helpers") {
  const auto g = [](cplx y) { return y * y + 3.0 + 1.0 / y; };
  CHECK(rel(circle_average(g, 0.7, 16), 3.0) < 1e-14);
  CHECK_THROWS_AS(circle_average(g, -1.0, 16), DomainError);
  CHECK_THROWS_AS(circle_points(1.0, 0.5), DomainError);
  CHECK_THROWS_AS(circle_points(1.0, 1.0 + 1e-6), ConvergenceError);
  CHECK(circle_points(0.5, 2.0) > 32);
}

}  // TEST_SUITE
