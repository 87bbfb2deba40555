#pragma once

// Command-line front end. Every command writes its artifact to one stream
// (stdout or --out) and diagnostics to another, with fixed exit codes:
//   0 success, 1 verification mismatch or I/O failure, 2 usage error or refusal.

#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace polycells::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct OutputRequest {
  std::string command;               // faces types classes atlas isotropy moduli tables verify
  std::map<std::string, int> params; // "n", "k", "max-size" when given
  std::string format = "csv";        // csv json svg
  std::optional<std::string> which;  // tables only
  std::optional<std::string> out_path;
  bool census = false;               // moduli only
};

/// Runs a parsed request. Artifact bytes go to `out` unless out_path is set.
int run(const OutputRequest& request, std::ostream& out, std::ostream& err);

/// Parses argv with the subcommand grammar and runs the request.
int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polycells::cli
