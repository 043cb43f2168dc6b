#include "macdonald/power_table.hpp"

#include <algorithm>
#include <numeric>

#include "macdonald/errors.hpp"

namespace macdonald {

PowerTable::PowerTable(int n_vars, int max_degree) : n_vars_(n_vars), max_degree_(max_degree) {
  if (n_vars < 1) throw DomainError("PowerTable: at least one variable required");
  if (max_degree < 0) throw DomainError("PowerTable: negative degree");
  long slots = 1;
  for (int i = 0; i < n_vars; ++i) {
    slots *= max_degree + 1;
    if (slots > 50'000'000) throw DomainError("PowerTable: table too large");
  }
  lookup_.assign(slots, -1);

  Exponent current;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (static_cast<int>(current.size()) == n_vars_ - 1) {
      current.push_back(remaining);
      lookup_[key(current)] = static_cast<long>(indices_.size());
      indices_.push_back(current);
      current.pop_back();
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      current.push_back(v);
      self(self, remaining - v);
      current.pop_back();
    }
  };
  for (int d = 0; d <= max_degree; ++d) rec(rec, d);
  values_.assign(indices_.size(), cplx(0.0));
}

long PowerTable::key(const Exponent& p) const {
  long k = 0;
  for (int v : p) k = k * (max_degree_ + 1) + v;
  return k;
}

long PowerTable::position(const Exponent& p) const {
  if (static_cast<int>(p.size()) != n_vars_) return -1;
  int total = 0;
  for (int v : p) {
    if (v < 0) return -1;
    total += v;
  }
  if (total > max_degree_) return -1;
  return lookup_[key(p)];
}

cplx& PowerTable::operator[](const Exponent& p) {
  const long pos = position(p);
  if (pos < 0) throw DomainError("PowerTable: index out of range");
  return values_[pos];
}

cplx PowerTable::operator[](const Exponent& p) const {
  const long pos = position(p);
  if (pos < 0) throw DomainError("PowerTable: index out of range");
  return values_[pos];
}

PowerTable multiply_truncated(const PowerTable& a, const PowerTable& b) {
  if (a.n_vars() != b.n_vars()) throw DomainError("PowerTable: variable count mismatch");
  PowerTable out(a.n_vars(), std::min(a.max_degree(), b.max_degree()));
  Exponent sum(a.n_vars());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.at(i) == cplx(0.0)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b.at(j) == cplx(0.0)) continue;
      for (int v = 0; v < a.n_vars(); ++v) sum[v] = a.index(i)[v] + b.index(j)[v];
      const long pos = out.position(sum);
      if (pos >= 0) out.at(pos) += a.at(i) * b.at(j);
    }
  }
  return out;
}

}  // namespace macdonald
