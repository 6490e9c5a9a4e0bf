#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qcw {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

struct RunConfig {
  std::string subcommand;
  std::optional<int> n;
  double tol = 1e-9;
  std::uint64_t shots = 100000;
  double noise = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> input;
  std::optional<std::string> output;
  /// json, csv or svg; empty picks the subcommand default.
  std::string format;
  bool quiet = false;

  // optimize
  int restarts = 8;
  int iters = 10000;
  double power_tol = 1e-14;

  // onc
  std::optional<double> delta;

  // sweep
  std::vector<double> etas{0.0, 1e-3, 1e-2, 1e-1};
  int seeds = 20;
};

/// Runs one subcommand. Artifacts go to `out` (or the --out file), the
/// human-readable summary to `err`. Returns 0 when every check passes, 2 on
/// a failed check and 1 on usage or I/O errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line (QCW_SEED supplies the default seed) and runs it.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int main_entry(int argc, char** argv);

}  // namespace qcw
