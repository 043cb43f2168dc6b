#include "macdonald/residues.hpp"

#include <algorithm>
#include <cmath>

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

constexpr int kResidueCap = 200'000;
constexpr double kResidueRatioLimit = 0.995;
constexpr int kMaxCirclePoints = 65536;

// Sums terms(m) for m = 0, 1, ... assuming |term(m+1)/term(m)| -> ratio < 1.
template <typename Term>
cplx sum_residues(Term&& term, double ratio, double eps, const char* who) {
  if (!(ratio < 1.0)) throw ConvergenceError(std::string(who) + ": residue series diverges");
  cplx sum = 0.0;
  for (int m = 0; m < kResidueCap; ++m) {
    const cplx t = term(m);
    sum += t;
    const double tail = std::abs(t) * ratio / (1.0 - ratio);
    if (m >= 8 && tail <= eps * std::abs(sum)) return sum;
  }
  throw ConvergenceError(std::string(who) + ": residue series did not converge within the cap");
}

// Res(i)/Res(i-1) = (1 - q^{k-i})/(1 - q^{-i}), written without q^{-i}.
double residue_step(int i, const QParams& p) {
  const double qi = std::pow(p.q(), i);
  return (qi - p.t()) / (qi - 1.0);
}

double moment_ratio(int n_pow, cplx lam12, const QParams& p) {
  return std::pow(p.q(), (-lam12 + p.k() + static_cast<double>(n_pow)).real());
}

}  // namespace

cplx kernel_residue(int m, const QParams& p) {
  const double q = p.q();
  cplx value = qpochhammer_inf(p.t(), q, p.eps()) / qpochhammer_inf(q, q, p.eps());
  for (int i = 1; i <= m; ++i) value *= residue_step(i, p);
  return value;
}

cplx moment_integrand(cplx y, int n_pow, cplx lam12, const QParams& p) {
  const double q = p.q();
  const double k = p.k();
  const cplx up = qpow(q, -lam12 + 0.5 * (k + 1.0)) / y;
  const cplx base = std::pow(q, 0.5 * (1.0 + k)) / y;
  return std::pow(y, n_pow) * theta_ratio(up, base, q, p.eps()) * kernel_s(1.0 / y, p);
}

cplx moment_closed_form(int n_pow, cplx lam12, const QParams& p) {
  const double q = p.q();
  const double k = p.k();
  const double e = p.eps();
  const cplx l21 = -lam12;
  const double n = n_pow;
  return qgamma(1.0 - k, q, e) / (qgamma(l21 + 1.0, q, e) * qgamma(lam12 + 1.0 - k, q, e)) *
         qgamma(l21 + k + n, q, e) * qgamma(l21 + 1.0, q, e) /
         (qgamma(l21 + k, q, e) * qgamma(l21 + n + 1.0, q, e)) * std::pow(q, 0.5 * (1.0 - k) * n);
}

cplx moment_residue_sum(int n_pow, cplx lam12, const QParams& p) {
  const double q = p.q();
  const double k = p.k();
  const cplx l21 = -lam12;
  const cplx theta0 = theta_ratio(qpow(q, l21 + k), p.t(), q, p.eps());
  // Res(m) = t^m scaled(m) with scaled(m) bounded, so no factor overflows.
  cplx scaled = kernel_residue(0, p);
  int last = 0;
  auto term = [&](int m) {
    for (; last < m; ++last) scaled *= residue_step(last + 1, p) / p.t();
    // y^n Theta(q^{l21+k-m})/Theta(q^{k-m}) = y_0^n theta0 q^{(n+l21) m}
    const double n = n_pow;
    return scaled * theta0 * qpow(q, 0.5 * (1.0 - k) * n + (n + l21 + k) * static_cast<double>(m));
  };
  return sum_residues(term, moment_ratio(n_pow, lam12, p), p.eps(), "moment_residue_sum");
}

cplx moment_binomial_sum(int n_pow, cplx lam12, const QParams& p) {
  if (n_pow < 0) throw DomainError("moment_binomial_sum: n must be nonnegative");
  const double q = p.q();
  const double k = p.k();
  const cplx l21 = -lam12;
  const double half = std::pow(q, 0.5 * (1.0 - k));
  // B_j = (q^{l21+k};q)_j/(q;q)_j half^j, needed from j = n on.
  cplx b = 1.0;
  for (int j = 0; j < n_pow; ++j) b *= (1.0 - qpow(q, l21 + k + static_cast<double>(j))) / (1.0 - std::pow(q, j + 1)) * half;
  cplx a = 1.0;
  auto term = [&, m_done = 0](int m) mutable {
    for (; m_done < m; ++m_done) {
      const int j = m_done;
      a *= (1.0 - qpow(q, lam12 + static_cast<double>(j))) / (1.0 - std::pow(q, j + 1)) * half;
      const int jb = n_pow + m_done;
      b *= (1.0 - qpow(q, l21 + k + static_cast<double>(jb))) / (1.0 - std::pow(q, jb + 1)) * half;
    }
    return a * b;
  };
  return sum_residues(term, std::pow(q, 1.0 - k), p.eps(), "moment_binomial_sum");
}

cplx moment_circle(int n_pow, cplx lam12, const QParams& p) {
  const double inner = std::pow(p.q(), 0.5 * (1.0 - p.k()));
  const double outer = 1.0 / inner;
  const auto g = [&](cplx y) { return moment_integrand(y, n_pow, lam12, p); };
  return circle_average(g, std::sqrt(inner * outer), circle_points(inner, outer));
}

cplx residue_integral_moment(int n_pow, cplx lam12, const QParams& p) {
  if (moment_ratio(n_pow, lam12, p) < kResidueRatioLimit) return moment_residue_sum(n_pow, lam12, p);
  return moment_circle(n_pow, lam12, p);
}

cplx fq_integrand(cplx u, std::array<cplx, 2> lam, cplx zeta, const QParams& p) {
  const double q = p.q();
  const double k = p.k();
  const cplx l21 = lam[1] - lam[0];
  const cplx up = qpow(q, l21 + 0.5 * (1.0 + k)) / u;
  const cplx base = std::pow(q, 0.5 * (1.0 + k)) / u;
  return theta_ratio(up, base, q, p.eps()) * kernel_s(1.0 / u, p) * kernel_s(u * zeta, p);
}

namespace {

cplx checked_ratio(cplx z1, cplx z2, const QParams& p, const char* who) {
  if (z2 == cplx(0.0)) throw DomainError(std::string(who) + ": z2 = 0");
  const cplx zeta = z1 / z2;
  if (!(std::abs(std::pow(p.q(), 1.0 - p.k()) * zeta) < 1.0)) {
    throw DomainError(std::string(who) + ": requires |q^{1-k} z1/z2| < 1");
  }
  return zeta;
}

}  // namespace

cplx integral_rep_fq_closed(std::array<cplx, 2> lam, cplx z1, cplx z2, const QParams& p) {
  const cplx zeta = checked_ratio(z1, z2, p, "integral_rep_fq_closed");
  const double q = p.q();
  const double k = p.k();
  const double e = p.eps();
  const cplx l12 = lam[0] - lam[1];
  const cplx l21 = -l12;
  return qgamma(1.0 - k, q, e) / (qgamma(l12 + 1.0 - k, q, e) * qgamma(l21 + 1.0, q, e)) *
         fq(k, l21 + k, l21 + 1.0, std::pow(q, 1.0 - k) * zeta, q, e);
}

cplx integral_rep_fq_residues(std::array<cplx, 2> lam, cplx z1, cplx z2, const QParams& p) {
  const cplx zeta = checked_ratio(z1, z2, p, "integral_rep_fq_residues");
  const double q = p.q();
  const double k = p.k();
  const cplx l21 = lam[1] - lam[0];
  const cplx theta0 = theta_ratio(qpow(q, l21 + k), p.t(), q, p.eps());
  cplx scaled = kernel_residue(0, p);
  int last = 0;
  auto term = [&](int m) {
    for (; last < m; ++last) scaled *= residue_step(last + 1, p) / p.t();
    const double u = std::pow(q, 0.5 * (1.0 - k) + m);
    // Res(m) Theta(q^{l21+k-m})/Theta(q^{k-m}) = scaled(m) theta0 q^{(l21+k) m}
    return scaled * theta0 * qpow(q, (l21 + k) * static_cast<double>(m)) * kernel_s(u * zeta, p);
  };
  const double ratio = std::pow(q, (l21 + k).real());
  return sum_residues(term, ratio, p.eps(), "integral_rep_fq_residues");
}

cplx integral_rep_fq_circle(std::array<cplx, 2> lam, cplx z1, cplx z2, const QParams& p) {
  const cplx zeta = checked_ratio(z1, z2, p, "integral_rep_fq_circle");
  const double inner = std::pow(p.q(), 0.5 * (1.0 - p.k()));
  double outer = 1.0 / inner;
  if (std::abs(zeta) > 1.0) outer /= std::abs(zeta);
  const auto g = [&](cplx u) { return fq_integrand(u, lam, zeta, p); };
  return circle_average(g, std::sqrt(inner * outer), circle_points(inner, outer));
}

cplx integral_rep_fq(std::array<cplx, 2> lam, cplx z1, cplx z2, const QParams& p) {
  const double ratio = std::pow(p.q(), (lam[1] - lam[0] + p.k()).real());
  if (ratio < kResidueRatioLimit) return integral_rep_fq_residues(lam, z1, z2, p);
  return integral_rep_fq_circle(lam, z1, z2, p);
}

cplx circle_average(const std::function<cplx(cplx)>& g, double radius, int points) {
  if (points < 1 || !(radius > 0.0)) throw DomainError("circle_average: invalid contour");
  cplx sum = 0.0;
  for (int j = 0; j < points; ++j) sum += g(std::polar(radius, 2.0 * M_PI * j / points));
  return sum / static_cast<double>(points);
}

int circle_points(double inner, double outer) {
  if (!(inner > 0.0 && outer > inner)) throw DomainError("circle_points: empty annulus");
  const double decay = std::log(std::sqrt(inner / outer));
  const double needed = std::log(1e-16) / decay + 32.0;
  if (needed > kMaxCirclePoints) {
    throw ConvergenceError("circle quadrature: annulus too thin for the point cap");
  }
  return static_cast<int>(std::ceil(needed));
}

}  // namespace macdonald
