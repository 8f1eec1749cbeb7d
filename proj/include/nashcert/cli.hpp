#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nashcert::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidMath = 2,
  kVerificationFailed = 3,
  kUsage = 4,
};

enum class OutputMode { Human, Machine };

/// Everything one invocation needs; filled from flags only.
struct RunConfig {
  std::string command;  // split | lift | merge | resultant | verify

  // Polynomial inputs, inline or "@path".
  std::string annihilator;       // split
  std::string real_annihilator;  // lift
  std::string base;              // lift, comma-separated z0
  std::string value;             // lift, f(z0)
  std::string p1, p2;            // merge
  std::optional<std::string> slice;
  std::string p, q, var = "w";  // resultant
  std::string poly, part = "f";  // verify

  std::optional<std::string> expr;  // --verify (split/lift/merge) or --expr (verify)
  std::optional<std::string> center;
  double radius = 0.5;
  std::optional<double> delta;
  std::size_t count = 200;
  double tol = 1e-8;
  std::uint64_t seed = 1;

  OutputMode mode = OutputMode::Human;
  bool explain = false;
};

/// Runs a parsed configuration; documents go to out, diagnostics to err.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (args[0] is the program name) and executes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nashcert::cli
