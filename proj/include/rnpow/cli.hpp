#pragma once

// Command-line surface: argument parsing, report serialization (table, CSV,
// JSON) and golden-file regression.
//
// JSON reports carry `schema_version`, the command name and a canonical
// `invocation` (the arguments that determine the output, excluding --jobs,
// --format and --checkpoint). Exact values are serialized as
// {"fraction": "num/den", "decimal": "<truncated>"}.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rnpow/softfloat.hpp"

namespace rnpow::cli {

inline constexpr int kSchemaVersion = 1;

enum class Command { Search, Spot, Bounds, Adversary, Verify, Regress };
enum class OutputFormat { Table, Csv, Json };

// Inclusive range of n, written "a..b" or "a".
struct NRange {
  std::int64_t first = 0;
  std::int64_t last = 0;
};

NRange parse_n_range(const std::string& text);

struct RunConfig {
  Command command = Command::Search;
  int p = 0;
  std::optional<NRange> n;
  RoundingMode mode = RoundingMode::NearestTiesEven;
  OutputFormat format = OutputFormat::Table;
  unsigned jobs = 0;  // 0: available parallelism
  std::optional<std::filesystem::path> checkpoint;
  int digits = 9;
  // search
  std::optional<std::uint64_t> k_begin;
  std::optional<std::uint64_t> k_end;
  bool allow_large_p = false;
  bool progress = false;
  // spot
  std::string x;
  // verify
  std::vector<std::string> checks;
  bool quick = false;
  // regress
  std::filesystem::path golden_dir;
  bool update = false;
};

struct RunResult {
  int status = 0;  // 0 ok, 1 verification failure, 2 usage error
  std::string output;
};

// Thrown for malformed command lines; the message is user-facing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses arguments (without the program name).
RunConfig parse_command_line(const std::vector<std::string>& args);

// Arguments that reproduce the report of `config`.
std::vector<std::string> canonical_invocation(const RunConfig& config);

RunResult run(const RunConfig& config);

// Runs parse_command_line + run, converting errors into status 2.
RunResult run_command_line(const std::vector<std::string>& args);

struct GoldenScenario {
  std::string name;
  std::vector<std::string> args;
};

// The reference scenarios stored under tests/golden.
std::vector<GoldenScenario> default_golden_scenarios();

// Reruns every *.json file in golden_dir from its recorded invocation and
// compares the JSON output byte for byte. With update, (re)writes the
// default scenarios instead.
RunResult regress(const std::filesystem::path& golden_dir, bool update,
                  unsigned jobs = 0);

}  // namespace rnpow::cli
