#include "macdonald/identities.hpp"

#include <cmath>
#include <vector>

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

// sum_i prod_{j!=i} (t z_i - z_j)/(z_i - z_j) f(T_i z), without the t prefactor.
cplx first_order_sum(const PointFunction& f, std::span<const cplx> z, double q, double t) {
  return macdonald_apply_numeric(f, 1, z, q, t) / t;
}

}  // namespace

cplx kernel_product(std::span<const cplx> z, std::span<const cplx> y, const QParams& p) {
  const double q = p.q();
  const double up = std::pow(q, 0.5 * (1.0 + p.k()));
  const double down = std::pow(q, 0.5 * (1.0 - p.k()));
  cplx product = 1.0;
  for (const cplx& zi : z) {
    for (const cplx& yj : y) {
      product *= qpochhammer_inf(up * zi / yj, q, p.eps()) / qpochhammer_inf(down * zi / yj, q, p.eps());
    }
  }
  return product;
}

double kernel_identity_residual(std::span<const cplx> z, std::span<const cplx> y,
                                const QParams& p) {
  const int n = static_cast<int>(y.size());
  if (static_cast<int>(z.size()) != n + 1 || n < 1) {
    throw DomainError("kernel_identity_residual: z must have one more coordinate than y");
  }
  const double t = p.t();
  const std::vector<cplx> yy(y.begin(), y.end());
  const std::vector<cplx> zz(z.begin(), z.end());
  const PointFunction in_z = [&](std::span<const cplx> v) { return kernel_product(v, yy, p); };
  const PointFunction in_y = [&](std::span<const cplx> v) { return kernel_product(zz, v, p); };
  const cplx lhs = macdonald_apply_numeric(in_z, 1, z, p);
  const cplx rhs = t * (std::pow(t, n + 1) * macdonald_apply_numeric(in_y, 1, y, 1.0 / p.q(), 1.0 / t) +
                        kernel_product(z, y, p));
  return std::abs(lhs - rhs) / std::abs(lhs);
}

cplx conjugation_kernel(std::span<const cplx> y, const QParams& p) {
  const double q = p.q();
  const double t = p.t();
  cplx product = 1.0;
  for (std::size_t l = 0; l < y.size(); ++l) {
    for (std::size_t s = l + 1; s < y.size(); ++s) {
      const cplx a = y[l] / y[s];
      product *= qpochhammer_inf(a, q, p.eps()) * qpochhammer_inf(1.0 / a, q, p.eps()) /
                 (qpochhammer_inf(t * a, q, p.eps()) * qpochhammer_inf(t / a, q, p.eps()));
    }
  }
  return product;
}

double conjugation_identity_residual(const PointFunction& f, std::span<const cplx> y,
                                     const QParams& p) {
  const int n = static_cast<int>(y.size());
  const double q = p.q();
  const double t = p.t();
  cplx lhs = 0.0;
  std::vector<cplx> shifted(y.begin(), y.end());
  for (int i = 0; i < n; ++i) {
    shifted.assign(y.begin(), y.end());
    shifted[i] *= q;
    cplx weight = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) weight *= (shifted[i] / t - shifted[j]) / (shifted[i] - shifted[j]);
    }
    lhs += weight * conjugation_kernel(shifted, p) * f(shifted);
  }
  const cplx rhs = conjugation_kernel(y, p) * std::pow(t, 1 - n) * first_order_sum(f, y, q, t);
  return std::abs(lhs - rhs) / std::abs(lhs);
}

cplx gauge_factor(std::span<const cplx> z, const QParams& p) {
  const double q = p.q();
  const double k = p.k();
  cplx product = 1.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const cplx a = z[i] / z[j];
      product *= std::pow(z[j], 1.0 - 2.0 * k) * qpochhammer_inf(p.t() * a, q, p.eps()) /
                 qpochhammer_inf(std::pow(q, 1.0 - k) * a, q, p.eps());
    }
  }
  return product;
}

double gauge_identity_residual(const PointFunction& f, std::span<const cplx> z, const QParams& p) {
  const double q = p.q();
  const double t = p.t();
  const PointFunction gauged = [&](std::span<const cplx> v) { return gauge_factor(v, p) * f(v); };
  const cplx lhs = first_order_sum(gauged, z, q, t);
  const cplx rhs = gauge_factor(z, p) * first_order_sum(f, z, q, q / t);
  return std::abs(lhs - rhs) / std::abs(lhs);
}

}  // namespace macdonald
