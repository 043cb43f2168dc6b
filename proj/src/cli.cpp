#include "macdonald/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "macdonald/continuation.hpp"
#include "macdonald/errors.hpp"
#include "macdonald/hcseries.hpp"
#include "macdonald/json_io.hpp"
#include "macdonald/macpoly.hpp"
#include "macdonald/operators.hpp"

namespace macdonald::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) {
    if (!current.empty()) parts.push_back(current);
  }
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw DomainError("not a number: '" + s + "'");
  return v;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  for (const std::string& s : split(text, ',')) out.push_back(parse_double(s));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const std::string& s : split(text, ',')) {
    const double v = parse_double(s);
    if (v != std::floor(v)) throw DomainError("not an integer: '" + s + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string number(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string joined(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string point_label(const std::vector<cplx>& z) {
  std::string out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) out += ';';
    out += number(z[i].real()) + ':' + number(z[i].imag());
  }
  return out;
}

json point_json(const std::vector<cplx>& z) {
  json out = json::array();
  for (const cplx& v : z) out.push_back(complex_to_json(v));
  return out;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Eval: return "eval";
    case Command::Solve: return "solve";
    case Command::Macpoly: return "macpoly";
    case Command::Connect: return "connect";
    case Command::Verify: return "verify";
  }
  return "";
}

Command command_from(const std::string& name) {
  if (name == "eval") return Command::Eval;
  if (name == "solve") return Command::Solve;
  if (name == "macpoly") return Command::Macpoly;
  if (name == "connect") return Command::Connect;
  if (name == "verify") return Command::Verify;
  throw DomainError("unknown command '" + name + "'");
}

Format format_from(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw DomainError("unknown format '" + name + "'");
}

XRMode mode_from(const std::string& name) {
  if (name == "A") return XRMode::ModeA;
  if (name == "B") return XRMode::ModeB;
  throw DomainError("unknown mode '" + name + "'");
}

struct Outcome {
  std::string document;
  int status = kExitOk;
};

struct Validated {
  QParams params;
  std::vector<cplx> lambda;
  Permutation w;
  int n;
};

Validated validate(const RunConfig& c) {
  QParams params(c.q, c.k);
  if (c.lambda.size() < 2) throw DomainError("lambda needs at least two entries");
  const int n = static_cast<int>(c.lambda.size());
  std::vector<cplx> lambda(c.lambda.begin(), c.lambda.end());
  Permutation w;
  if (c.w.empty()) {
    for (int i = 0; i < n; ++i) w.push_back(i);
  } else {
    for (int v : c.w) w.push_back(v - 1);
  }
  if (c.N && *c.N < 0) throw DomainError("N must be nonnegative");
  if (!(c.tolerance > 0.0)) throw DomainError("tolerance must be positive");
  for (const auto& z : c.points) {
    if (static_cast<int>(z.size()) != n && c.command != Command::Macpoly) {
      throw DomainError("every point needs " + std::to_string(n) + " coordinates");
    }
  }
  if (c.command != Command::Macpoly) {
    SpectralData check(lambda, w);
    (void)check;
  }
  return {params, lambda, w, n};
}

std::vector<std::vector<cplx>> points_or_default(const RunConfig& c, int n) {
  if (!c.points.empty()) return c.points;
  return {standard_points(n, c.q)};
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

Outcome do_solve(const RunConfig& c, const Validated& v) {
  const SpectralData s(v.lambda, v.w);
  const HCSolution sol = solve_coefficients(s, v.params, c.N.value_or(default_truncation(v.n)));
  if (c.format == Format::Json) return {render(to_json(sol))};
  std::string csv = "p,re,im\n";
  for (std::size_t pos = 0; pos < sol.table.size(); ++pos) {
    const cplx a = sol.table.at(pos);
    csv += joined(sol.table.index(pos), ':') + ',' + number(a.real()) + ',' + number(a.imag()) + '\n';
  }
  return {csv};
}

Outcome do_eval(const RunConfig& c, const Validated& v) {
  const SpectralData s(v.lambda, v.w);
  const HCSolution sol = solve_coefficients(s, v.params, c.N.value_or(default_truncation(v.n)));
  const std::optional<cplx> lead =
      c.mode == XRMode::ModeA ? sol.leading_coefficient_modeA : sol.leading_coefficient_modeB;
  json results = json::array();
  std::string csv = "point,re,im,tail_estimate,truncation_warning\n";
  for (const auto& z : points_or_default(c, v.n)) {
    const Evaluation e = evaluate(sol, z, c.tolerance);
    results.push_back({{"point", point_json(z)},
                       {"value", complex_to_json(e.value)},
                       {"normalized_value", lead ? complex_to_json(*lead * e.value) : json(nullptr)},
                       {"tail_estimate", e.tail_estimate},
                       {"truncation_warning", e.truncation_warning}});
    csv += point_label(z) + ',' + number(e.value.real()) + ',' + number(e.value.imag()) + ',' +
           number(e.tail_estimate) + ',' + (e.truncation_warning ? "true" : "false") + '\n';
  }
  if (c.format == Format::Csv) return {csv};
  return {render({{"command", "eval"},
                  {"mode", c.mode == XRMode::ModeA ? "A" : "B"},
                  {"N", sol.max_degree()},
                  {"results", results}})};
}

Outcome do_macpoly(const RunConfig& c, const Validated& v) {
  std::vector<int> parts;
  for (double x : c.lambda) {
    if (x != std::floor(x)) throw DomainError("macpoly expects an integer partition");
    parts.push_back(static_cast<int>(x));
  }
  const Partition lam(parts);
  const LaurentPoly poly = macdonald_poly(lam, v.n, v.params, c.seed);
  if (c.format == Format::Csv) {
    std::string csv = "exp,re,im\n";
    for (const auto& [e, a] : poly.terms()) {
      csv += joined(e, ':') + ',' + number(a.real()) + ',' + number(a.imag()) + '\n';
    }
    return {csv};
  }
  return {render({{"command", "macpoly"},
                  {"partition", parts},
                  {"n", v.n},
                  {"q", c.q},
                  {"k", c.k},
                  {"eigenvalue", complex_to_json(macdonald_eigenvalue(lam, v.n, 1, v.params))},
                  {"polynomial", to_json(poly)}})};
}

Outcome do_connect(const RunConfig& c, const Validated& v) {
  const SpectralData s(v.lambda, v.w);
  const Normalization norm = c.hat ? Normalization::Hat : Normalization::LeadingCoefficient;
  json matrices = json::array();
  std::string csv = "point,i,row,col,re,im\n";
  for (const auto& z : points_or_default(c, v.n)) {
    const ConnectionMatrix m = braid_matrix(s, c.index, z, v.params, norm);
    matrices.push_back(to_json(m));
    for (int r = 0; r < 2; ++r) {
      for (int col = 0; col < 2; ++col) {
        csv += point_label(z) + ',' + std::to_string(m.i) + ',' + std::to_string(r) + ',' +
               std::to_string(col) + ',' + number(m.entries[r][col].real()) + ',' +
               number(m.entries[r][col].imag()) + '\n';
      }
    }
  }
  if (c.format == Format::Csv) return {csv};
  return {render({{"command", "connect"},
                  {"normalization", c.hat ? "hat" : "leading"},
                  {"matrices", matrices}})};
}

Outcome do_verify(const RunConfig& c, const Validated& v) {
  const std::vector<Permutation> weyl =
      c.w.empty() ? all_permutations(v.n) : std::vector<Permutation>{v.w};
  const int N = c.N.value_or(default_truncation(v.n));
  json checks = json::array();
  std::string csv = "check,w,point,m,residual,tolerance,pass\n";
  bool all_pass = true;
  for (const Permutation& w : weyl) {
    const HCSolution sol = solve_coefficients(SpectralData(v.lambda, w), v.params, N);
    std::vector<int> label;
    for (int x : w) label.push_back(x + 1);
    for (const auto& z : points_or_default(c, v.n)) {
      for (int m = 1; m <= v.n; ++m) {
        const double r = eigen_residual(sol, m, z);
        const bool pass = r < c.tolerance;
        all_pass = all_pass && pass;
        checks.push_back({{"check", "eigen_residual"},
                          {"w", label},
                          {"point", point_json(z)},
                          {"m", m},
                          {"residual", r},
                          {"pass", pass}});
        csv += "eigen_residual," + joined(label, ':') + ',' + point_label(z) + ',' + std::to_string(m) +
               ',' + number(r) + ',' + number(c.tolerance) + ',' + (pass ? "true" : "false") + '\n';
      }
    }
  }
  const int status = all_pass ? kExitOk : kExitCheckFailed;
  if (c.format == Format::Csv) return {csv, status};
  return {render({{"command", "verify"},
                  {"n", v.n},
                  {"q", c.q},
                  {"k", c.k},
                  {"N", N},
                  {"tolerance", c.tolerance},
                  {"checks", checks},
                  {"all_pass", all_pass}}),
          status};
}

std::string error_document(const char* type, const std::string& message, int status) {
  return render({{"error", {{"type", type}, {"message", message}, {"exit_code", status}}}});
}

void apply_config_file(const std::string& path, RunConfig& c, bool& has_command) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
    if (j.contains("command")) {
      c.command = command_from(j.at("command").get<std::string>());
      has_command = true;
    }
    if (j.contains("q")) c.q = j.at("q").get<double>();
    if (j.contains("k")) c.k = j.at("k").get<double>();
    if (j.contains("lambda")) c.lambda = j.at("lambda").get<std::vector<double>>();
    if (j.contains("w")) c.w = j.at("w").get<std::vector<int>>();
    if (j.contains("N")) c.N = j.at("N").get<int>();
    if (j.contains("points")) {
      c.points.clear();
      for (const json& point : j.at("points")) {
        std::vector<cplx> z;
        for (const json& v : point) z.push_back(complex_from_json(v));
        c.points.push_back(z);
      }
    }
    if (j.contains("format")) c.format = format_from(j.at("format").get<std::string>());
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tol")) c.tolerance = j.at("tol").get<double>();
    if (j.contains("mode")) c.mode = mode_from(j.at("mode").get<std::string>());
    if (j.contains("index")) c.index = j.at("index").get<int>();
    if (j.contains("normalization")) c.hat = j.at("normalization").get<std::string>() == "hat";
  } catch (const json::exception& e) {
    throw DomainError(std::string("config file: ") + e.what());
  }
}

}  // namespace

std::vector<std::vector<cplx>> parse_points(const std::string& text) {
  std::vector<std::vector<cplx>> points;
  for (const std::string& point : split(text, ';')) {
    std::vector<cplx> z;
    for (const std::string& coord : split(point, ',')) {
      const auto colon = coord.find(':');
      if (colon == std::string::npos) {
        z.emplace_back(parse_double(coord), 0.0);
      } else {
        z.emplace_back(parse_double(coord.substr(0, colon)), parse_double(coord.substr(colon + 1)));
      }
    }
    points.push_back(z);
  }
  return points;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto fail = [&](const char* type, const std::exception& e, int status) {
    err << command_name(config.command) << ": " << e.what() << '\n';
    out << error_document(type, e.what(), status);
    return status;
  };
  try {
    const Validated v = validate(config);
    Outcome outcome;
    switch (config.command) {
      case Command::Eval: outcome = do_eval(config, v); break;
      case Command::Solve: outcome = do_solve(config, v); break;
      case Command::Macpoly: outcome = do_macpoly(config, v); break;
      case Command::Connect: outcome = do_connect(config, v); break;
      case Command::Verify: outcome = do_verify(config, v); break;
    }
    out << outcome.document;
    return outcome.status;
  } catch (const PoleError& e) {
    return fail("pole", e, kExitDomain);
  } catch (const ZoneError& e) {
    return fail("zone", e, kExitDomain);
  } catch (const SingularConfigurationError& e) {
    return fail("singular_configuration", e, kExitDomain);
  } catch (const DomainError& e) {
    return fail("domain", e, kExitDomain);
  } catch (const NondegeneracyError& e) {
    return fail("nondegeneracy", e, kExitResonance);
  } catch (const NumericDegeneracyError& e) {
    return fail("numeric_degeneracy", e, kExitResonance);
  } catch (const ResonanceError& e) {
    return fail("resonance", e, kExitResonance);
  } catch (const ConvergenceError& e) {
    return fail("convergence", e, kExitConvergence);
  } catch (const std::exception& e) {
    return fail("domain", e, kExitDomain);
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Series solutions of the Macdonald difference equations"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string q, k, lambda, w, N, points, format, seed, tol, mode, index, config_path, normalization;
  CLI::Option* opt_q = app.add_option("--q", q, "base q in (0,1)");
  CLI::Option* opt_k = app.add_option("--k", k, "k in (0,1), t = q^k");
  CLI::Option* opt_lambda = app.add_option("--lambda", lambda, "spectral vector a,b,... (partition for macpoly)");
  CLI::Option* opt_w = app.add_option("--w", w, "Weyl element as a 1-based permutation i1,i2,...");
  CLI::Option* opt_N = app.add_option("--N", N, "truncation degree");
  CLI::Option* opt_points = app.add_option("--points", points, "points: re[:im],... separated by ';'");
  CLI::Option* opt_format = app.add_option("--format", format, "json or csv");
  CLI::Option* opt_seed = app.add_option("--seed", seed, "seed for interpolation samples");
  CLI::Option* opt_tol = app.add_option("--tol", tol, "tolerance");
  CLI::Option* opt_mode = app.add_option("--mode", mode, "leading coefficient mode A or B");
  CLI::Option* opt_index = app.add_option("--index", index, "wall index i for connect (1-based)");
  CLI::Option* opt_norm = app.add_option("--normalization", normalization, "leading or hat (connect)");
  app.add_option("--config", config_path, "JSON file with the same keys as the flags");

  const char* names[] = {"eval", "solve", "macpoly", "connect", "verify"};
  for (const char* name : names) app.add_subcommand(name, std::string("run ") + name);

  RunConfig config;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    out << error_document("domain", e.what(), kExitDomain);
    return kExitDomain;
  }

  try {
    bool has_command = false;
    if (!config_path.empty()) apply_config_file(config_path, config, has_command);
    for (CLI::App* sub : app.get_subcommands()) {
      config.command = command_from(sub->get_name());
      has_command = true;
    }
    if (!has_command) throw DomainError("no command given (eval, solve, macpoly, connect, verify)");
    if (opt_q->count()) config.q = parse_double(q);
    if (opt_k->count()) config.k = parse_double(k);
    if (opt_lambda->count()) config.lambda = parse_doubles(lambda);
    if (opt_w->count()) config.w = parse_ints(w);
    if (opt_N->count()) config.N = parse_ints(N).at(0);
    if (opt_points->count()) config.points = parse_points(points);
    if (opt_format->count()) config.format = format_from(format);
    if (opt_seed->count()) config.seed = static_cast<std::uint64_t>(std::stoull(seed));
    if (opt_tol->count()) config.tolerance = parse_double(tol);
    if (opt_mode->count()) config.mode = mode_from(mode);
    if (opt_index->count()) config.index = parse_ints(index).at(0);
    if (opt_norm->count()) {
      if (normalization != "leading" && normalization != "hat") {
        throw DomainError("unknown normalization '" + normalization + "'");
      }
      config.hat = normalization == "hat";
    }
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    out << error_document("domain", e.what(), kExitDomain);
    return kExitDomain;
  }
  return run(config, out, err);
}

}  // namespace macdonald::cli
