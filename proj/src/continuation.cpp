#include "macdonald/continuation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

// 1/Gamma_q(a), zero at the poles.
cplx reciprocal_qgamma(cplx a, double q, double eps) {
  if (terminating_degree(a, q) >= 0) return 0.0;
  return 1.0 / qgamma(a, q, eps);
}

bool terminates(cplx a, cplx b, double q) {
  return terminating_degree(a, q) >= 0 || terminating_degree(b, q) >= 0;
}

cplx checked_fq(cplx a, cplx b, cplx c, cplx z, double q, double eps, const char* who) {
  if (!terminates(a, b, q) && !(std::abs(z) < 1.0)) {
    throw ZoneError(std::string(who) + ": series argument outside the unit disk");
  }
  return fq(a, b, c, z, q, eps);
}

cplx cpow(cplx base, cplx exponent) { return std::exp(exponent * std::log(base)); }

std::vector<cplx> swapped(std::span<const cplx> z, int i) {
  std::vector<cplx> out(z.begin(), z.end());
  std::swap(out[i - 1], out[i]);
  return out;
}

}  // namespace

std::pair<cplx, cplx> fq_connection(cplx a, cplx b, cplx c, cplx z, const QParams& p) {
  const double q = p.q();
  const double e = p.eps();
  if (z == cplx(0.0)) throw ZoneError("fq_connection: z = 0");
  const cplx lhs = checked_fq(a, b, c, z, q, e, "fq_connection");
  const cplx w = qpow(q, c + 1.0 - a - b) / z;
  const cplx gc = qgamma(c, q, e);

  cplx rhs = 0.0;
  const cplx coef_a = reciprocal_qgamma(b, q, e) * reciprocal_qgamma(c - a, q, e);
  if (coef_a != cplx(0.0)) {
    rhs += gc * qgamma(b - a, q, e) * coef_a * theta_ratio(qpow(q, a) * z, z, q, e) *
           checked_fq(a, a - c + 1.0, a - b + 1.0, w, q, e, "fq_connection");
  }
  const cplx coef_b = reciprocal_qgamma(a, q, e) * reciprocal_qgamma(c - b, q, e);
  if (coef_b != cplx(0.0)) {
    rhs += gc * qgamma(a - b, q, e) * coef_b * theta_ratio(qpow(q, b) * z, z, q, e) *
           checked_fq(b, b - c + 1.0, b - a + 1.0, w, q, e, "fq_connection");
  }
  return {lhs, rhs};
}

cplx fhat(std::array<cplx, 2> lam, cplx z1, cplx z2, const QParams& p) {
  const double q = p.q();
  const double k = p.k();
  const double e = p.eps();
  if (z1 == cplx(0.0) || z2 == cplx(0.0)) throw ZoneError("fhat: zero coordinate");
  const cplx l12 = lam[0] - lam[1];
  const cplx arg = std::pow(q, 1.0 - k) * z1 / z2;
  const cplx norm = qgamma(1.0 - k, q, e) * reciprocal_qgamma(-l12 + 1.0 - k, q, e) *
                    reciprocal_qgamma(l12 + 1.0, q, e);
  return norm * cpow(z1, lam[0] + 0.5 * k) * cpow(z2, lam[1] - 0.5 * k) *
         checked_fq(k, l12 + k, l12 + 1.0, arg, q, e, "fhat");
}

std::pair<cplx, cplx> fhat_continuation(std::array<cplx, 2> lam, cplx z1, cplx z2,
                                        const QParams& p) {
  const double q = p.q();
  const double k = p.k();
  const double t = p.t();
  const double e = p.eps();
  const cplx l12 = lam[0] - lam[1];
  const cplx l21 = -l12;
  const cplx inv = z2 / z1;
  const cplx zeta = z1 / z2;
  const cplx lhs = fhat(lam, z1, z2, p);
  const cplx first = cpow(zeta, k) * theta_ratio(qpow(q, l12 + k), qpow(q, l12), q, e) *
                     theta_ratio(inv, t * inv, q, e) * fhat({lam[1], lam[0]}, z2, z1, p);
  const cplx second = cpow(zeta, l12 + k) * theta_ratio(t, qpow(q, l21), q, e) *
                      theta_ratio(qpow(q, l21) * inv, t * inv, q, e) * fhat(lam, z2, z1, p);
  return {lhs, first + second};
}

std::pair<cplx, cplx> connection_coefficients(const SpectralData& s, int i, cplx zeta,
                                              const QParams& p, Normalization norm) {
  if (i < 1 || i >= s.n()) throw DomainError("connection_coefficients: index out of range");
  if (zeta == cplx(0.0)) throw DomainError("connection_coefficients: zero ratio");
  if (zeta.imag() == 0.0 && zeta.real() < 0.0) {
    throw ZoneError("connection_coefficients: ratio on the negative real axis");
  }
  const double q = p.q();
  const double k = p.k();
  const double t = p.t();
  const double e = p.eps();
  const cplx d = s.eta()[i - 1] - s.eta()[i];
  const cplx log_zeta = std::log(zeta);
  const cplx inv = 1.0 / zeta;
  const cplx c1 = theta_ratio(t, qpow(q, -d), q, e) * theta_ratio(qpow(q, -d) * inv, t * inv, q, e) *
                  std::exp((d + k) * log_zeta);
  cplx c2 = theta_ratio(qpow(q, d + k), qpow(q, d), q, e) * theta_ratio(inv, t * inv, q, e) *
            std::exp(k * log_zeta);
  if (norm == Normalization::LeadingCoefficient) c2 *= qpow(q, k * d);
  return {c1, c2};
}

ConnectionMatrix braid_matrix(const SpectralData& s, int i, std::span<const cplx> z,
                              const QParams& p, Normalization norm) {
  if (static_cast<int>(z.size()) != s.n()) throw DomainError("braid_matrix: point has wrong dimension");
  if (i < 1 || i >= s.n()) throw DomainError("braid_matrix: index out of range");
  const cplx zeta = z[i - 1] / z[i];
  const auto [c1, c2] = connection_coefficients(s, i, zeta, p, norm);
  const auto [d1, d2] = connection_coefficients(s.transposed(i - 1), i, zeta, p, norm);
  return {i, s.w(), zeta, Matrix2{{{c1, c2}, {d2, d1}}}};
}

cplx continued_value(const SpectralData& s, int i, std::span<const cplx> z, const QParams& p, int N) {
  const std::vector<cplx> image = swapped(z, i);
  const ConnectionMatrix m = braid_matrix(s, i, z, p);
  const HCSolution same = solve_coefficients(s, p, N);
  const HCSolution other = solve_coefficients(s.transposed(i - 1), p, N);
  if (!same.leading_coefficient_modeA || !other.leading_coefficient_modeA) {
    throw PoleError("continued_value: leading coefficient has a q-Gamma pole", 0);
  }
  return m.entries[0][0] * *same.leading_coefficient_modeA * evaluate(same, image).value +
         m.entries[0][1] * *other.leading_coefficient_modeA * evaluate(other, image).value;
}

BoltzmannWeights boltzmann_w(cplx mu_ij, cplx v, const XRParams& xr, int n) {
  if (n < 2) throw DomainError("boltzmann_w: n must be at least 2");
  const double lx = std::log(xr.x());
  const double base = xr.base();
  for (const auto& [arg, name] : {std::pair<cplx, const char*>{v - 1.0, "[v-1]"}, {mu_ij, "[mu]"}}) {
    if (on_q_lattice(std::exp(2.0 * arg * lx), base)) {
      throw ResonanceError(std::string("boltzmann_w: bracket ") + name + " vanishes");
    }
  }
  const auto br = [&](cplx u) { return bracket_v(u, xr); };
  const cplx log_z = 2.0 * v * lx;
  const double power = ((xr.r() - 1.0) / xr.r()) * ((n - 1.0) / n);
  const cplx r1 = std::exp(power * log_z) * g1(std::exp(-log_z), xr.x(), xr.r(), n) /
                  g1(std::exp(log_z), xr.x(), xr.r(), n);
  const cplx denom = br(v - 1.0) * br(mu_ij);
  return {mu_ij, v, r1 * br(v - mu_ij) * br(1.0) / denom, r1 * br(v) * br(mu_ij - 1.0) / denom, r1};
}

Matrix2 boltzmann_matrix(cplx mu_ij, cplx v, const XRParams& xr, int n) {
  const BoltzmannWeights plus = boltzmann_w(mu_ij, v, xr, n);
  const BoltzmannWeights minus = boltzmann_w(-mu_ij, v, xr, n);
  return Matrix2{{{plus.w_same, plus.w_cross}, {minus.w_cross, minus.w_same}}};
}

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

double relative_gap(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return max_abs(a - b) / std::max(1.0, max_abs(a));
}

}  // namespace

BraidReport verify_braid_relations(const SpectralData& s, const QParams& p, std::span<const cplx> z) {
  const int n = s.n();
  if (static_cast<int>(z.size()) != n) throw DomainError("verify_braid_relations: point has wrong dimension");
  const std::vector<Permutation> basis = all_permutations(n);
  std::map<Permutation, int> position;
  for (std::size_t a = 0; a < basis.size(); ++a) position[basis[a]] = static_cast<int>(a);
  const int dim = static_cast<int>(basis.size());

  const auto action = [&](int i, std::span<const cplx> point) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    const cplx zeta = point[i - 1] / point[i];
    for (int a = 0; a < dim; ++a) {
      const SpectralData sw = s.with_w(basis[a]);
      const auto [c1, c2] = connection_coefficients(sw, i, zeta, p);
      m(a, a) = c1;
      m(a, position.at(sw.transposed(i - 1).w())) = c2;
    }
    return m;
  };

  BraidReport report{0.0, 0.0, 0.0, 0.0};
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
  for (int i = 1; i < n; ++i) {
    const Eigen::MatrixXcd twice = action(i, z) * action(i, swapped(z, i));
    report.double_crossing = std::max(report.double_crossing, max_abs(twice - id));
  }
  for (int i = 1; i + 1 < n; ++i) {
    const std::vector<cplx> zi = swapped(z, i);
    const std::vector<cplx> zj = swapped(z, i + 1);
    const Eigen::MatrixXcd left = action(i, z) * action(i + 1, zi) * action(i, swapped(zi, i + 1));
    const Eigen::MatrixXcd right = action(i + 1, z) * action(i, zj) * action(i + 1, swapped(zj, i));
    report.braid = std::max(report.braid, relative_gap(left, right));
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      const Eigen::MatrixXcd left = action(i, z) * action(j, swapped(z, i));
      const Eigen::MatrixXcd right = action(j, z) * action(i, swapped(z, j));
      report.far_commutation = std::max(report.far_commutation, relative_gap(left, right));
    }
  }
  const std::vector<cplx> reference = eigenvalue_tuple(s, p);
  for (const Permutation& w : basis) {
    const std::vector<cplx> gamma = s.with_w(w).shifted_eta(p.k());
    for (int m = 1; m <= n; ++m) {
      report.eigenvalue_spread =
          std::max(report.eigenvalue_spread, std::abs(eigenvalue_c(gamma, m, p) - reference[m - 1]));
    }
  }
  return report;
}

}  // namespace macdonald
