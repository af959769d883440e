// eitbleach command-line front end. Parses the verb and flags, then drives
// the simulation core exclusively through the public C API.
#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "eitbleach.h"

namespace {

struct CommonFlags {
  std::string config;
  std::string out_dir;
  std::string format;
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string params_patch;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool config_required) {
  auto* opt = cmd->add_option("--config", flags.config, "scenario config (JSON)");
  if (config_required) opt->required();
  cmd->add_option("--out", flags.out_dir, "output directory (overrides config)");
  cmd->add_option("--format", flags.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--seed", flags.seed, "random seed (overrides config)")
      ->each([&flags](const std::string&) { flags.has_seed = true; });
}

int run_scenario(const CommonFlags& flags) {
  eitb_run_result* result = nullptr;
  const char* out_dir = flags.out_dir.empty() ? nullptr : flags.out_dir.c_str();
  const char* format = flags.format.empty() ? nullptr : flags.format.c_str();
  const char* patch = flags.params_patch.empty() ? nullptr : flags.params_patch.c_str();
  const std::uint64_t* seed = flags.has_seed ? &flags.seed : nullptr;
  const eitb_status status =
      eitb_run_scenario_file(flags.config.c_str(), out_dir, seed, format, patch, &result);
  if (status != EITB_OK || !result) {
    std::cerr << "error: " << eitb_last_error() << "\n";
    return 1;
  }
  const int exit_code = eitb_run_result_exit_code(result);
  if (exit_code == 0) {
    const char* summary = eitb_run_result_summary(result);
    if (summary && *summary) std::cout << summary << "\n";
    for (size_t i = 0; i < eitb_run_result_file_count(result); ++i)
      std::cout << "wrote " << eitb_run_result_file(result, i) << "\n";
  } else {
    std::cerr << eitb_run_result_error_json(result) << "\n";
  }
  eitb_run_result_destroy(result);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eitbleach: tunable absorption nonlinearity in three-level media"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(eitb_version()));

  CommonFlags spectrum_flags, bleach_flags, prop_flags, trans_flags, mb_flags, design_flags;

  auto* spectrum = app.add_subcommand("spectrum", "absorption spectrum over two-photon detuning");
  add_common(spectrum, spectrum_flags, true);

  auto* bleach = app.add_subcommand("bleach-curve", "absorption coefficient versus intensity");
  add_common(bleach, bleach_flags, true);

  auto* propagate = app.add_subcommand("propagate", "intensity profile through a thick medium");
  add_common(propagate, prop_flags, true);
  std::string arrangement;
  propagate->add_option("--arrangement", arrangement, "uniform or copropagating")
      ->check(CLI::IsMember({"uniform", "copropagating"}));

  auto* trans = app.add_subcommand("transmittance", "transmittance versus input intensity");
  add_common(trans, trans_flags, true);

  auto* mb = app.add_subcommand("mb-filter", "Maxwell-Bloch noise filtration run");
  add_common(mb, mb_flags, true);

  auto* design = app.add_subcommand("design", "material preset design calculator");
  add_common(design, design_flags, false);
  std::string preset = "nv";
  double target_t0 = 0.01;
  std::string design_arrangement = "uniform";
  design->add_option("--preset", preset, "material preset: nv or rb")
      ->check(CLI::IsMember({"nv", "rb"}));
  design->add_option("--t0", target_t0, "target small-signal transmission");
  design->add_option("--arrangement", design_arrangement, "uniform or copropagating")
      ->check(CLI::IsMember({"uniform", "copropagating"}));

  CLI11_PARSE(app, argc, argv);

  if (spectrum->parsed()) return run_scenario(spectrum_flags);
  if (bleach->parsed()) return run_scenario(bleach_flags);
  if (propagate->parsed()) {
    if (!arrangement.empty())
      prop_flags.params_patch = "{\"arrangement\":\"" + arrangement + "\"}";
    return run_scenario(prop_flags);
  }
  if (trans->parsed()) return run_scenario(trans_flags);
  if (mb->parsed()) return run_scenario(mb_flags);

  if (design->parsed()) {
    if (!design_flags.config.empty()) return run_scenario(design_flags);
    // Flag-driven design: print the report; write design.json only if --out given.
    size_t needed = 0;
    if (eitb_design_text(preset.c_str(), target_t0, design_arrangement.c_str(), nullptr, 0,
                         &needed) != EITB_OK) {
      std::cerr << "error: " << eitb_last_error() << "\n";
      return 1;
    }
    std::vector<char> buf(needed + 1);
    eitb_design_text(preset.c_str(), target_t0, design_arrangement.c_str(), buf.data(), buf.size(),
                     nullptr);
    std::cout << buf.data();
    if (!design_flags.out_dir.empty()) {
      char config[256];
      std::snprintf(config, sizeof(config),
                    "{\"kind\":\"design\",\"params\":{\"preset\":\"%s\",\"t0\":%.17g,"
                    "\"arrangement\":\"%s\"}}",
                    preset.c_str(), target_t0, design_arrangement.c_str());
      eitb_run_result* result = nullptr;
      const char* format = design_flags.format.empty() ? nullptr : design_flags.format.c_str();
      if (eitb_run_scenario_json(config, design_flags.out_dir.c_str(), nullptr, format, nullptr,
                                 &result) != EITB_OK ||
          !result) {
        std::cerr << "error: " << eitb_last_error() << "\n";
        return 1;
      }
      const int code = eitb_run_result_exit_code(result);
      for (size_t i = 0; i < eitb_run_result_file_count(result); ++i)
        std::cout << "wrote " << eitb_run_result_file(result, i) << "\n";
      if (code != 0) std::cerr << eitb_run_result_error_json(result) << "\n";
      eitb_run_result_destroy(result);
      return code;
    }
    return 0;
  }
  return 1;
}
