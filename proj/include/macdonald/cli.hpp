#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "macdonald/operators.hpp"
#include "macdonald/qcore.hpp"

namespace macdonald::cli {

enum class Command { Eval, Solve, Macpoly, Connect, Verify };
enum class Format { Json, Csv };

struct RunConfig {
  Command command = Command::Verify;
  double q = 0.5;
  double k = 0.4;
  std::vector<double> lambda{0.3, -0.3};
  std::vector<int> w;  // 1-based; empty means identity
  std::optional<int> N;
  std::vector<std::vector<cplx>> points;  // empty means z_i = q^{-3(i-1)}
  Format format = Format::Json;
  std::uint64_t seed = kDefaultSampleSeed;  // interpolation samples
  double tolerance = 1e-8;
  XRMode mode = XRMode::ModeA;
  int index = 1;  // wall for `connect`
  bool hat = false;
};

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitResonance = 3;
inline constexpr int kExitConvergence = 4;

// "re" or "re:im" coordinates separated by ',', points separated by ';'.
std::vector<std::vector<cplx>> parse_points(const std::string& text);

// Runs a validated configuration. Writes exactly one document to `out`;
// on failure that document is a JSON error object.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses command-line arguments (including --config) and runs.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace macdonald::cli
