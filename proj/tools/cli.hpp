#ifndef QSO5_CLI_HPP
#define QSO5_CLI_HPP

#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "qso5/basis.hpp"

namespace qso5::cli {

enum class Command { Dim, Build, Verify, Casimir, Expand, Contract, Separate };
enum class Precision { Double, High };
enum class Format { Json, Csv };

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kUnsupported = 3 };

struct RunConfig {
  Command command = Command::Dim;
  std::optional<IrrepLabel> irrep;
  std::optional<HalfInt> n2;  // contract takes n2 alone
  std::string basis = "I";
  std::string q = "1";
  Precision precision = Precision::Double;
  std::optional<double> tolerance;
  std::string output;  // empty: stdout
  std::string input;   // verify: re-import an exported matrix file
  std::optional<Format> format;
  int order = 4;
  double lambda = 1.0;
  std::vector<HalfInt> n1_values;
  int steps = 12;
  std::vector<std::pair<IrrepLabel, IrrepLabel>> pairs;
};

/// Parses argv into a config; throws UsageError on bad flags or labels.
RunConfig parse_args(int argc, const char* const* argv);

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Executes a parsed config, writing results to out (or config.output) and diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the exit-code mapping applied.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qso5::cli

#endif  // QSO5_CLI_HPP
