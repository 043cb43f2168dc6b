#include "macdonald/operators.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

// All m-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == m) {
      out.push_back(current);
      return;
    }
    for (int i = start; i < n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

void check_order(int m, int n, const char* who) {
  if (m < 1 || m > n) {
    throw DomainError(std::string(who) + ": operator order m must satisfy 1 <= m <= n");
  }
}

void check_distinct(std::span<const cplx> z) {
  double scale = 0.0;
  for (const cplx& v : z) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      if (std::abs(z[i] - z[j]) < kSingularTolerance * scale) {
        throw SingularConfigurationError("coincident coordinates z_" + std::to_string(i + 1) +
                                         " and z_" + std::to_string(j + 1));
      }
    }
  }
}

}  // namespace

SpectralData::SpectralData(std::vector<cplx> lambda, Permutation w)
    : lambda_(std::move(lambda)), w_(std::move(w)) {
  const int n = static_cast<int>(lambda_.size());
  if (n < 2) throw DomainError("SpectralData: n must be at least 2");
  if (static_cast<int>(w_.size()) != n) throw DomainError("SpectralData: w has wrong length");
  std::vector<int> sorted = w_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i) throw DomainError("SpectralData: w is not a permutation");
  }
  const cplx total = std::accumulate(lambda_.begin(), lambda_.end(), cplx(0.0));
  if (std::abs(total) > 1e-12) throw DomainError("SpectralData: lambda must sum to zero");
  eta_.resize(n);
  for (int i = 0; i < n; ++i) eta_[i] = lambda_[w_[i]];
}

SpectralData::SpectralData(std::vector<cplx> lambda)
    : SpectralData(lambda, [&] {
        Permutation id(lambda.size());
        std::iota(id.begin(), id.end(), 0);
        return id;
      }()) {}

std::vector<double> SpectralData::delta() const {
  std::vector<double> d(n());
  for (int i = 0; i < n(); ++i) d[i] = 0.5 * (n() - 1) - i;
  return d;
}

std::vector<double> SpectralData::rho(double k) const {
  std::vector<double> d = delta();
  for (double& v : d) v *= k;
  return d;
}

std::vector<cplx> SpectralData::shifted_eta(double k) const {
  std::vector<cplx> out(eta_);
  const std::vector<double> r = rho(k);
  for (int i = 0; i < n(); ++i) out[i] += r[i];
  return out;
}

std::vector<cplx> SpectralData::shifted_lambda(double k) const {
  std::vector<cplx> out(lambda_);
  const std::vector<double> r = rho(k);
  for (int i = 0; i < n(); ++i) out[i] += r[i];
  return out;
}

SpectralData SpectralData::transposed(int i) const {
  if (i < 0 || i + 1 >= n()) throw DomainError("SpectralData: transposition index out of range");
  Permutation w = w_;
  std::swap(w[i], w[i + 1]);
  return SpectralData(lambda_, w);
}

SpectralData SpectralData::with_w(Permutation w) const { return SpectralData(lambda_, std::move(w)); }

std::vector<Permutation> all_permutations(int n) {
  Permutation w(n);
  std::iota(w.begin(), w.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

cplx eigenvalue_c(std::span<const cplx> gamma, int m, double q, double t) {
  const int n = static_cast<int>(gamma.size());
  check_order(m, n, "eigenvalue_c");
  cplx sum = 0.0;
  for (const auto& subset : subsets(n, m)) {
    cplx term = 1.0;
    for (int s : subset) term *= qpow(q, gamma[s]) * std::pow(t, s + 1);
    sum += term;
  }
  return sum;
}

cplx eigenvalue_c(std::span<const cplx> gamma, int m, const QParams& p) {
  return eigenvalue_c(gamma, m, p.q(), p.t());
}

std::vector<cplx> eigenvalue_tuple(const SpectralData& s, const QParams& p) {
  const std::vector<cplx> gamma = s.shifted_lambda(p.k());
  std::vector<cplx> out;
  for (int m = 1; m <= s.n(); ++m) out.push_back(eigenvalue_c(gamma, m, p));
  return out;
}

cplx macdonald_apply_numeric(const PointFunction& f, int m, std::span<const cplx> z,
                             double q, double t) {
  const int n = static_cast<int>(z.size());
  check_order(m, n, "macdonald_apply_numeric");
  check_distinct(z);
  std::vector<char> selected(n);
  std::vector<cplx> shifted(n);
  cplx sum = 0.0;
  for (const auto& subset : subsets(n, m)) {
    std::fill(selected.begin(), selected.end(), 0);
    for (int s : subset) selected[s] = 1;
    cplx weight = 1.0;
    for (int s : subset) {
      for (int j = 0; j < n; ++j) {
        if (!selected[j]) weight *= (t * z[s] - z[j]) / (z[s] - z[j]);
      }
    }
    for (int j = 0; j < n; ++j) shifted[j] = selected[j] ? q * z[j] : z[j];
    sum += weight * f(shifted);
  }
  return std::pow(t, 0.5 * m * (m + 1)) * sum;
}

cplx macdonald_apply_numeric(const PointFunction& f, int m, std::span<const cplx> z,
                             const QParams& p) {
  return macdonald_apply_numeric(f, m, z, p.q(), p.t());
}

std::vector<Exponent> decreasing_vectors(int n, int lo, int hi, int total) {
  std::vector<Exponent> out;
  Exponent current;
  auto rec = [&](auto&& self, int remaining_len, int cap, int remaining_sum) -> void {
    if (remaining_len == 0) {
      if (remaining_sum == 0) out.push_back(current);
      return;
    }
    for (int v = cap; v >= lo; --v) {
      // Remaining entries lie in [lo, v].
      const long min_rest = static_cast<long>(lo) * (remaining_len - 1);
      const long max_rest = static_cast<long>(v) * (remaining_len - 1);
      const long rest = remaining_sum - v;
      if (rest < min_rest || rest > max_rest) continue;
      current.push_back(v);
      self(self, remaining_len - 1, v, static_cast<int>(rest));
      current.pop_back();
    }
  };
  if (n > 0 && lo <= hi) rec(rec, n, hi, total);
  return out;
}

bool dominated_by(const Exponent& mu, const Exponent& nu) {
  if (mu.size() != nu.size()) return false;
  long a = 0, b = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    a += mu[i];
    b += nu[i];
    if (a > b) return false;
  }
  return a == b;
}

LaurentPoly macdonald_apply_poly(const LaurentPoly& poly, int m, const QParams& p,
                                 int sample_count, std::uint64_t seed) {
  const int n = poly.n();
  check_order(m, n, "macdonald_apply_poly");
  LaurentPoly result(n);
  if (poly.empty()) return result;
  if (poly.asymmetry() > 1e-12 * std::max(1.0, poly.max_abs_coefficient())) {
    throw DomainError("macdonald_apply_poly: input polynomial is not symmetric");
  }

  struct DegreeSupport {
    int lo = 0, hi = 0;
    std::set<Exponent> partitions;
  };
  std::map<int, DegreeSupport> by_degree;
  for (const auto& [e, c] : poly.terms()) {
    Exponent sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const int degree = std::accumulate(sorted.begin(), sorted.end(), 0);
    auto [it, fresh] = by_degree.try_emplace(degree);
    DegreeSupport& d = it->second;
    if (fresh) {
      d.lo = sorted.back();
      d.hi = sorted.front();
    }
    d.lo = std::min(d.lo, sorted.back());
    d.hi = std::max(d.hi, sorted.front());
    d.partitions.insert(sorted);
  }

  std::vector<Exponent> basis;
  for (const auto& [degree, d] : by_degree) {
    for (const Exponent& nu : decreasing_vectors(n, d.lo, d.hi, degree)) {
      const bool below = std::any_of(d.partitions.begin(), d.partitions.end(),
                                     [&](const Exponent& mu) { return dominated_by(nu, mu); });
      if (below) basis.push_back(nu);
    }
  }

  const int K = static_cast<int>(basis.size());
  const int S = std::max(sample_count, 2 * K + 4);
  const int H = K + 2;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> modulus(1.0, 2.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  const PointFunction f = [&poly](std::span<const cplx> z) { return poly.evaluate(z); };

  for (int attempt = 0; attempt < 3; ++attempt) {
    Eigen::MatrixXcd A(S + H, K);
    Eigen::VectorXcd b(S + H);
    std::vector<cplx> z(n);
    for (int s = 0; s < S + H; ++s) {
      for (int i = 0; i < n; ++i) z[i] = std::polar(modulus(rng), phase(rng));
      for (int j = 0; j < K; ++j) A(s, j) = monomial_symmetric_value(basis[j], z);
      b(s) = macdonald_apply_numeric(f, m, z, p);
    }
    const Eigen::MatrixXcd fit = A.topRows(S);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(fit);
    if (qr.rank() < K) continue;
    const Eigen::VectorXcd coeffs = qr.solve(b.head(S));
    const double scale = std::max(b.cwiseAbs().maxCoeff(), 1e-300);
    const double held_out = (A.bottomRows(H) * coeffs - b.tail(H)).cwiseAbs().maxCoeff() / scale;
    if (held_out > 1e-10) continue;

    const double cmax = coeffs.cwiseAbs().maxCoeff();
    for (int j = 0; j < K; ++j) {
      if (std::abs(coeffs(j)) <= 1e-12 * cmax) continue;
      result += coeffs(j) * monomial_symmetric(basis[j]);
    }
    return result;
  }
  throw NumericDegeneracyError("macdonald_apply_poly: interpolation failed on three sample sets");
}

double duality_check(const PointFunction& f, std::span<const cplx> z, const QParams& p) {
  const int n = static_cast<int>(z.size());
  if (n < 2) throw DomainError("duality_check: n must be at least 2");
  const cplx value = f(z);
  if (value == cplx(0.0)) throw DomainError("duality_check: function vanishes at z");
  const cplx lhs = macdonald_apply_numeric(f, n - 1, z, p.q(), p.t());
  const cplx rhs = std::pow(p.t(), 0.5 * n * (n + 1)) *
                   macdonald_apply_numeric(f, 1, z, 1.0 / p.q(), 1.0 / p.t());
  return std::abs(lhs - rhs) / std::abs(value);
}

}  // namespace macdonald
