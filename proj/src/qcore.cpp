#include "macdonald/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

constexpr long kProductCap = 10'000'000;
constexpr long kSeriesCap = 10'000'000;

void require_base(double q, const char* who) {
  if (!(std::abs(q) < 1.0)) {
    throw DomainError(std::string(who) + ": base must satisfy |q| < 1");
  }
}

void require_unit_interval(double q, const char* who) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError(std::string(who) + ": base must satisfy 0 < q < 1");
  }
}

// Splits z = q^{-j} w with q < |w| <= 1.
struct Reduced {
  cplx w;
  long j;
};

Reduced reduce_to_annulus(cplx z, double q) {
  const double level = std::log(std::abs(z)) / std::log(q);
  const long j = -static_cast<long>(std::floor(level));
  return {z * std::pow(q, static_cast<double>(j)), j};
}

// log of (-1)^j w^j q^{-j(j+1)/2}, without the sign.
cplx reduction_log_factor(const Reduced& r, double q) {
  const double j = static_cast<double>(r.j);
  return j * std::log(r.w) - 0.5 * j * (j + 1.0) * std::log(q);
}

cplx theta_core(cplx w, double q, double eps) {
  return qpochhammer_inf(w, q, eps) * qpochhammer_inf(q / w, q, eps) *
         qpochhammer_inf(q, q, eps);
}

}  // namespace

QParams::QParams(double q, double k, double eps) : q_(q), k_(k), eps_(eps) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("QParams: q must lie in (0,1)");
  if (!(k > 0.0 && k < 1.0)) throw DomainError("QParams: k must lie in (0,1)");
  if (!(eps > 0.0 && eps < 1e-6)) {
    throw DomainError("QParams: eps must lie in (0, 1e-6)");
  }
  t_ = std::pow(q, k);
}

XRParams::XRParams(const QParams& base, XRMode mode) : mode_(mode) {
  r_ = mode == XRMode::ModeA ? 1.0 / (1.0 - base.k()) : 1.0 / base.k();
  x_ = std::pow(base.q(), 1.0 / (2.0 * r_));
  base_ = std::pow(x_, 2.0 * r_);
  if (std::abs(base_ - base.q()) > 1e-14) {
    throw DomainError("XRParams: x^{2r} does not reproduce q");
  }
}

XRParams::XRParams(double x, double r, XRMode mode) : x_(x), r_(r), mode_(mode) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("XRParams: x must lie in (0,1)");
  if (!(r > 1.0)) throw DomainError("XRParams: r must exceed 1");
  base_ = std::pow(x_, 2.0 * r_);
}

cplx qpow(double q, cplx a) { return std::exp(a * std::log(q)); }

bool on_q_lattice(cplx z, double q, double tol) {
  if (z == cplx(0.0)) return false;
  const cplx s = std::log(z) / std::log(q);
  return std::abs(s - std::round(s.real())) < tol;
}

cplx qpochhammer_inf(cplx z, double q, double eps) {
  require_base(q, "qpochhammer_inf");
  if (z == cplx(0.0)) return 1.0;
  cplx product = 1.0;
  cplx term = z;  // z q^i
  long i = 0;
  while (std::abs(term) >= eps) {
    product *= 1.0 - term;
    term *= q;
    if (++i > kProductCap) throw ConvergenceError("qpochhammer_inf: product cap reached");
  }
  // sum_{i >= i*} log(1 - z q^i) to first order.
  return product * std::exp(-term / (1.0 - q));
}

cplx qpochhammer(cplx z, double q, int n) {
  cplx product = 1.0;
  cplx term = z;
  for (int i = 0; i < n; ++i) {
    product *= 1.0 - term;
    term *= q;
  }
  return product;
}

long terminating_degree(cplx a, double q) {
  const double re = a.real();
  if (re > 0.5) return -1;
  const long lo = std::max(0L, static_cast<long>(std::floor(-re)) - 1);
  const long hi = static_cast<long>(std::ceil(-re)) + 1;
  for (long m = lo; m <= hi; ++m) {
    if (std::abs(1.0 - qpow(q, a + static_cast<double>(m))) < kPoleTolerance) return m;
  }
  return -1;
}

cplx qgamma(cplx a, double q, double eps) {
  require_unit_interval(q, "qgamma");
  if (const long m = terminating_degree(a, q); m >= 0) {
    throw PoleError("qgamma: pole at a = " + std::to_string(-m), -m);
  }
  return qpochhammer_inf(q, q, eps) * std::exp((1.0 - a) * std::log(1.0 - q)) /
         qpochhammer_inf(qpow(q, a), q, eps);
}

cplx theta(cplx z, double q, double eps) {
  require_unit_interval(q, "theta");
  if (z == cplx(0.0)) throw DomainError("theta: z = 0");
  const Reduced r = reduce_to_annulus(z, q);
  if (r.j == 0) return theta_core(z, q, eps);
  const double sign = (r.j % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(reduction_log_factor(r, q)) * theta_core(r.w, q, eps);
}

cplx theta_ratio(cplx a, cplx b, double q, double eps) {
  require_unit_interval(q, "theta_ratio");
  if (a == cplx(0.0) || b == cplx(0.0)) throw DomainError("theta_ratio: zero argument");
  if (on_q_lattice(b, q)) throw ResonanceError("theta_ratio: denominator argument on q-lattice");
  const Reduced ra = reduce_to_annulus(a, q);
  const Reduced rb = reduce_to_annulus(b, q);
  const double sign = ((ra.j - rb.j) % 2 == 0) ? 1.0 : -1.0;
  const cplx log_factor = reduction_log_factor(ra, q) - reduction_log_factor(rb, q);
  return sign * std::exp(log_factor) * theta_core(ra.w, q, eps) / theta_core(rb.w, q, eps);
}

cplx double_pochhammer(cplx z, double p1, double p2, double eps) {
  require_base(p1, "double_pochhammer");
  require_base(p2, "double_pochhammer");
  if (z == cplx(0.0)) return 1.0;
  cplx product = 1.0;
  cplx row = z;  // z p2^{i2}
  long i2 = 0;
  while (std::abs(row) >= eps) {
    product *= qpochhammer_inf(row, p1, eps);
    row *= p2;
    if (++i2 > kProductCap) throw ConvergenceError("double_pochhammer: product cap reached");
  }
  return product * std::exp(-row / ((1.0 - p1) * (1.0 - p2)));
}

cplx g1(cplx z, double x, double r, int n, double eps) {
  if (n < 2) throw DomainError("g1: n must be at least 2");
  if (!(x > 0.0 && x < 1.0) || !(r > 0.0)) throw DomainError("g1: invalid x or r");
  const double p1 = std::pow(x, 2.0 * r);
  const double p2 = std::pow(x, 2.0 * n);
  const auto curly = [&](double scale) { return double_pochhammer(scale * z, p1, p2, eps); };
  return curly(x * x) * curly(std::pow(x, 2.0 * r + 2.0 * n - 2.0)) /
         (curly(p1) * curly(p2));
}

cplx kernel_s(cplx z, const QParams& p) {
  const double q = p.q();
  const double k = p.k();
  return qpochhammer_inf(std::pow(q, 0.5 * (1.0 + k)) * z, q, p.eps()) /
         qpochhammer_inf(std::pow(q, 0.5 * (1.0 - k)) * z, q, p.eps());
}

cplx kernel_s(cplx z, const XRParams& xr, double eps) {
  const double x = xr.x();
  const double base = xr.base();
  return qpochhammer_inf(std::pow(x, 2.0 * xr.r() - 1.0) * z, base, eps) /
         qpochhammer_inf(x * z, base, eps);
}

cplx kernel_t(cplx z, const QParams& p) {
  const double q = p.q();
  const double k = p.k();
  return (1.0 - z) * qpochhammer_inf(std::pow(q, 1.0 - k) * z, q, p.eps()) /
         qpochhammer_inf(std::pow(q, k) * z, q, p.eps());
}

cplx kernel_t(cplx z, const XRParams& xr, double eps) {
  const double x = xr.x();
  const double base = xr.base();
  return (1.0 - z) * qpochhammer_inf(x * x * z, base, eps) /
         qpochhammer_inf(std::pow(x, 2.0 * xr.r() - 2.0) * z, base, eps);
}

cplx bracket_v(cplx v, const XRParams& xr, double eps) {
  const double log_x = std::log(xr.x());
  const cplx prefactor = std::exp((v * v / xr.r() - v) * log_x);
  return prefactor * theta(std::exp(2.0 * v * log_x), xr.base(), eps);
}

namespace {

// Sums sum_j term_j where term_{j+1} = term_j * ratio(j) until the geometric
// tail bound drops below eps * |sum|.
template <typename Ratio>
cplx sum_hypergeometric(Ratio&& ratio, double asymptotic_ratio, double eps, const char* who) {
  cplx sum = 1.0;
  cplx term = 1.0;
  for (long j = 0; j < kSeriesCap; ++j) {
    const cplx next = term * ratio(j);
    sum += next;
    if (next == cplx(0.0)) return sum;
    const double local = std::abs(next) / std::abs(term);
    const double rho = std::max(local, asymptotic_ratio);
    term = next;
    if (rho < 1.0) {
      const double tail = std::abs(term) * rho / (1.0 - rho);
      if (tail <= eps * std::max(std::abs(sum), 1e-300) && std::abs(term) <= eps * std::abs(sum)) {
        return sum;
      }
    }
  }
  throw ConvergenceError(std::string(who) + ": series did not converge within the iteration cap");
}

}  // namespace

cplx fq(cplx a, cplx b, cplx c, cplx z, double q, double eps) {
  require_unit_interval(q, "fq");
  const long ma = terminating_degree(a, q);
  const long mb = terminating_degree(b, q);
  long m = -1;
  if (ma >= 0) m = ma;
  if (mb >= 0) m = (m < 0) ? mb : std::min(m, mb);

  const auto check_denominator = [&](cplx qc) {
    if (std::abs(1.0 - qc) < kPoleTolerance) {
      throw PoleError("fq: lower parameter c is a nonpositive integer", -terminating_degree(c, q));
    }
  };

  if (m >= 0) {
    cplx sum = 1.0;
    cplx term = 1.0;
    cplx qa = qpow(q, a), qb = qpow(q, b), qc = qpow(q, c);
    double q1 = q;
    for (long j = 0; j < m; ++j) {
      check_denominator(qc);
      term *= (1.0 - qa) * (1.0 - qb) / ((1.0 - q1) * (1.0 - qc)) * z;
      sum += term;
      qa *= q;
      qb *= q;
      qc *= q;
      q1 *= q;
    }
    return sum;
  }
  if (z == cplx(0.0)) return 1.0;
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("fq: non-terminating series requires |z| < 1");
  }
  if (terminating_degree(c, q) >= 0) {
    throw PoleError("fq: lower parameter c is a nonpositive integer", -terminating_degree(c, q));
  }
  cplx qa = qpow(q, a), qb = qpow(q, b), qc = qpow(q, c);
  double q1 = q;
  auto ratio = [&](long) {
    const cplx r = (1.0 - qa) * (1.0 - qb) / ((1.0 - q1) * (1.0 - qc)) * z;
    qa *= q;
    qb *= q;
    qc *= q;
    q1 *= q;
    return r;
  };
  return sum_hypergeometric(ratio, std::abs(z), eps, "fq");
}

cplx qbinomial_series(cplx a, cplx z, double q, double eps) {
  require_unit_interval(q, "qbinomial_series");
  if (!(std::abs(z) < 1.0)) throw DomainError("qbinomial_series: requires |z| < 1");
  if (z == cplx(0.0)) return 1.0;
  cplx qa = qpow(q, a);
  double q1 = q;
  auto ratio = [&](long) {
    const cplx r = (1.0 - qa) / (1.0 - q1) * z;
    qa *= q;
    q1 *= q;
    return r;
  };
  return sum_hypergeometric(ratio, std::abs(z), eps, "qbinomial_series");
}

}  // namespace macdonald
