#include "macdonald/json_io.hpp"

#include "macdonald/errors.hpp"

namespace macdonald {

namespace {

json optional_complex(const std::optional<cplx>& z) {
  return z ? complex_to_json(*z) : json(nullptr);
}

std::optional<cplx> optional_complex_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return complex_from_json(j.at(key));
}

json complex_list(const std::vector<cplx>& v) {
  json out = json::array();
  for (const cplx& z : v) out.push_back(complex_to_json(z));
  return out;
}

json one_based(const Permutation& w) {
  json out = json::array();
  for (int v : w) out.push_back(v + 1);
  return out;
}

Permutation zero_based(const json& j) {
  Permutation w;
  for (const json& v : j) w.push_back(v.get<int>() - 1);
  return w;
}

}  // namespace

json complex_to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_object() || !j.contains("re")) throw DomainError("expected a complex number {re, im}");
  return {j.at("re").get<double>(), j.value("im", 0.0)};
}

json to_json(const HCSolution& sol) {
  json coeffs = json::array();
  for (std::size_t pos = 0; pos < sol.table.size(); ++pos) {
    const cplx a = sol.table.at(pos);
    coeffs.push_back({{"p", sol.table.index(pos)}, {"re", a.real()}, {"im", a.imag()}});
  }
  return json{{"n", sol.n()},
              {"q", sol.params.q()},
              {"k", sol.params.k()},
              {"lambda", complex_list(sol.spectral.lambda())},
              {"w", one_based(sol.spectral.w())},
              {"N", sol.max_degree()},
              {"prefactor_exponent", complex_list(sol.prefactor_exponent)},
              {"coeffs", coeffs},
              {"leading_coefficient_modeA", optional_complex(sol.leading_coefficient_modeA)},
              {"leading_coefficient_modeB", optional_complex(sol.leading_coefficient_modeB)}};
}

HCSolution hcsolution_from_json(const json& j) {
  try {
    const QParams params(j.at("q").get<double>(), j.at("k").get<double>());
    std::vector<cplx> lambda;
    for (const json& v : j.at("lambda")) lambda.push_back(complex_from_json(v));
    const SpectralData spectral(lambda, zero_based(j.at("w")));
    if (j.at("n").get<int>() != spectral.n()) throw DomainError("HCSolution: n does not match lambda");
    std::vector<cplx> prefactor;
    for (const json& v : j.at("prefactor_exponent")) prefactor.push_back(complex_from_json(v));
    if (static_cast<int>(prefactor.size()) != spectral.n()) {
      throw DomainError("HCSolution: prefactor exponent has wrong length");
    }
    PowerTable table(spectral.n() - 1, j.at("N").get<int>());
    for (const json& c : j.at("coeffs")) {
      table[c.at("p").get<Exponent>()] = complex_from_json(c);
    }
    return HCSolution{spectral, params, prefactor, table,
                      optional_complex_from(j, "leading_coefficient_modeA"),
                      optional_complex_from(j, "leading_coefficient_modeB")};
  } catch (const json::exception& e) {
    throw DomainError(std::string("HCSolution JSON: ") + e.what());
  }
}

json to_json(const LaurentPoly& poly) {
  json terms = json::array();
  for (const auto& [e, c] : poly.terms()) terms.push_back({{"exp", e}, {"re", c.real()}, {"im", c.imag()}});
  return json{{"n", poly.n()}, {"terms", terms}};
}

LaurentPoly laurent_poly_from_json(const json& j) {
  try {
    LaurentPoly poly(j.at("n").get<int>());
    for (const json& t : j.at("terms")) poly.add(t.at("exp").get<Exponent>(), complex_from_json(t));
    return poly;
  } catch (const json::exception& e) {
    throw DomainError(std::string("LaurentPoly JSON: ") + e.what());
  }
}

json to_json(const ConnectionMatrix& m) {
  json entries = json::array();
  for (const auto& row : m.entries) entries.push_back({complex_to_json(row[0]), complex_to_json(row[1])});
  return json{{"i", m.i}, {"w", one_based(m.w)}, {"ratio", complex_to_json(m.ratio)}, {"entries", entries}};
}

ConnectionMatrix connection_matrix_from_json(const json& j) {
  try {
    ConnectionMatrix m{j.at("i").get<int>(), zero_based(j.at("w")), complex_from_json(j.at("ratio")), {}};
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) m.entries[r][c] = complex_from_json(j.at("entries").at(r).at(c));
    }
    return m;
  } catch (const json::exception& e) {
    throw DomainError(std::string("ConnectionMatrix JSON: ") + e.what());
  }
}

}  // namespace macdonald
