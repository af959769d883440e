#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "presets.hpp"
#include "types.hpp"

// Scenario configs: JSON in, CSV/JSON series out. Everything is computed
// before the first byte is written and files land atomically (temp +
// rename), so a failing run leaves no partial outputs. Outputs embed the
// library version and a hash of the effective config; identical config and
// seed give byte-identical files.
namespace eitb::scenario {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitSolver = 3;

struct RunOverrides {
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;  // "csv" or "json"
  // JSON object merged key-by-key into config["params"] before execution
  // (CLI flags such as --arrangement travel through here).
  std::optional<std::string> params_patch;
};

struct RunResult {
  int exit_code = kExitOk;
  std::vector<std::string> files;  // paths written
  std::string error_json;          // machine-readable error, empty on success
  std::string summary;             // short human-readable description
};

// Parse, validate and execute a scenario config from a file or a raw JSON
// string. Never throws; failures are reported through the exit code and
// error_json (exit 2 for schema problems, 3 for solver failures).
RunResult run_file(const std::string& config_path, const RunOverrides& overrides = {});
RunResult run_json_text(const std::string& config_text, const RunOverrides& overrides = {});

// FNV-1a 64-bit, used for the config hash embedded in every output.
std::uint64_t fnv1a64(const std::string& text);

std::string format_design_report(const presets::DesignReport& report);

}  // namespace eitb::scenario
