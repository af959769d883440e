#include "scenario.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "analytic.hpp"
#include "constants.hpp"
#include "core_model.hpp"
#include "maxwell_bloch.hpp"
#include "propagation.hpp"
#include "steady_state.hpp"

namespace eitb::scenario {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_hex(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// ---------------------------------------------------------------------------
// Schema helpers. All config access funnels through these so that failures
// carry the full field path.

const json& require_field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing required field");
  return *it;
}

double require_num(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require_field(obj, key, path);
  if (!v.is_number()) throw SchemaError(path + "." + key, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw SchemaError(path + "." + key, "must be finite");
  return d;
}

double opt_num(const json& obj, const std::string& key, const std::string& path, double fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  return require_num(obj, key, path);
}

long require_int(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require_field(obj, key, path);
  if (!v.is_number_integer()) throw SchemaError(path + "." + key, "expected an integer");
  return v.get<long>();
}

std::string require_str(const json& obj, const std::string& key, const std::string& path) {
  const json& v = require_field(obj, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

std::string opt_str(const json& obj, const std::string& key, const std::string& path,
                    const std::string& fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  return require_str(obj, key, path);
}

bool opt_bool(const json& obj, const std::string& key, const std::string& path, bool fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_boolean()) throw SchemaError(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

std::vector<double> build_grid(const json& spec, const std::string& path, bool log_default) {
  const double lo = require_num(spec, "min", path);
  const double hi = require_num(spec, "max", path);
  const long points = require_int(spec, "points", path);
  const std::string spacing = opt_str(spec, "spacing", path, log_default ? "log" : "linear");
  if (points < 2) throw SchemaError(path + ".points", "need at least 2 points");
  if (!(hi > lo)) throw SchemaError(path + ".max", "must exceed min");
  std::vector<double> grid(points);
  if (spacing == "log") {
    if (!(lo > 0.0)) throw SchemaError(path + ".min", "log spacing needs min > 0");
    const double f = std::log(hi / lo) / (points - 1);
    for (long i = 0; i < points; ++i) grid[i] = lo * std::exp(f * i);
  } else if (spacing == "linear") {
    const double step = (hi - lo) / (points - 1);
    for (long i = 0; i < points; ++i) grid[i] = lo + step * i;
  } else {
    throw SchemaError(path + ".spacing", "must be \"log\" or \"linear\"");
  }
  grid.back() = hi;
  return grid;
}

AtomParams atom_from_json(const json& obj, const std::string& path) {
  AtomParams a;
  a.gamma_sp = require_num(obj, "gamma_sp", path);
  a.gamma_deph = opt_num(obj, "gamma_deph", path, 0.0);
  a.validate();
  return a;
}

// Either the full physical medium or the reduced {xi, bulk_index,
// wavelength} form; the reduced form back-fills a density that reproduces
// the requested xi with a nominal dipole.
MediumParams medium_from_json(const json& obj, const std::string& path) {
  MediumParams m;
  if (obj.contains("xi")) {
    const double xi = require_num(obj, "xi", path);
    if (!(xi > 0.0)) throw SchemaError(path + ".xi", "must be > 0");
    m.bulk_index = opt_num(obj, "bulk_index", path, 1.0);
    m.eps_r = opt_num(obj, "eps_r", path, 1.0);
    const double wavelength = opt_num(obj, "wavelength", path, 638e-9);
    m.omega_trans_s = 2.0 * kPi * kSpeedOfLight / wavelength;
    m.omega_trans_p = m.omega_trans_s;
    m.dipole_ab = m.dipole_bc = 1e-30;
    m.density = xi * kHbar * m.eps_r * kEps0 * m.bulk_index * kSpeedOfLight /
                (2.0 * m.dipole_ab * m.dipole_ab * m.omega_trans_s);
  } else {
    m.density = require_num(obj, "density", path);
    m.dipole_ab = require_num(obj, "dipole", path);
    m.dipole_bc = opt_num(obj, "dipole_bc", path, m.dipole_ab);
    m.eps_r = opt_num(obj, "eps_r", path, 1.0);
    m.bulk_index = opt_num(obj, "bulk_index", path, 1.0);
    const double wavelength = require_num(obj, "wavelength", path);
    m.omega_trans_s = 2.0 * kPi * kSpeedOfLight / wavelength;
    m.omega_trans_p = m.omega_trans_s;
  }
  m.validate();
  return m;
}

// ---------------------------------------------------------------------------
// Output assembly.

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct OutFile {
  std::string name;
  std::string content;
};

struct EmitContext {
  std::string header;  // "# eitbleach <version> kind=... config=..."
  std::string hash_hex;
  std::string format;  // csv or json
};

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

OutFile emit_table(const EmitContext& ctx, const std::string& base, const Table& table) {
  if (ctx.format == "json") {
    json j;
    j["version"] = kVersion;
    j["config"] = ctx.hash_hex;
    j["columns"] = table.columns;
    json rows = json::array();
    for (const auto& r : table.rows) rows.push_back(r);
    j["rows"] = std::move(rows);
    return {base + ".json", j.dump(1) + "\n"};
  }
  std::ostringstream out;
  out << ctx.header << "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i)
    out << (i ? "," : "") << csv_escape(table.columns[i]);
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
    out << "\n";
  }
  return {base + ".csv", out.str()};
}

OutFile emit_json(const EmitContext& ctx, const std::string& base, json payload) {
  payload["version"] = kVersion;
  payload["config"] = ctx.hash_hex;
  return {base + ".json", payload.dump(1) + "\n"};
}

// ---------------------------------------------------------------------------
// Scenario runners. Each computes everything, then hands back files.

std::vector<OutFile> run_spectrum(const json& params, const EmitContext& ctx,
                                  std::string& summary) {
  const std::string path = "params";
  AtomParams atom = atom_from_json(require_field(params, "atom", path), path + ".atom");
  const json& drive_j = require_field(params, "drive", path);
  DriveParams drive;
  drive.omega_s = require_num(drive_j, "omega_s", path + ".drive");
  drive.omega_p = require_num(drive_j, "omega_p", path + ".drive");
  drive.delta_one = opt_num(drive_j, "delta_one", path + ".drive", 0.0);
  drive.validate();
  const MediumParams medium =
      medium_from_json(require_field(params, "medium", path), path + ".medium");
  const std::vector<double> deltas =
      build_grid(require_field(params, "delta", path), path + ".delta", false);

  struct Series {
    std::string label;
    double gamma_deph;
  };
  std::vector<Series> series;
  if (params.contains("series")) {
    const json& arr = params.at("series");
    if (!arr.is_array() || arr.empty())
      throw SchemaError(path + ".series", "expected a non-empty array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string spath = path + ".series[" + std::to_string(i) + "]";
      series.push_back({require_str(arr[i], "label", spath),
                        require_num(arr[i], "gamma_deph", spath)});
    }
  } else {
    series.push_back({"default", atom.gamma_deph});
  }

  const double xi = model::compute_xi(medium);
  Table t;
  t.columns = {"series", "delta", "alpha", "alpha_over_alpha0", "chi_re", "chi_im", "refr_index"};
  for (const auto& s : series) {
    AtomParams a = atom;
    a.gamma_deph = s.gamma_deph;
    const double alpha0 = a.gamma_total() > 0.0 ? 2.0 * xi / a.gamma_total() : 0.0;
    auto spectrum = steady::absorption_spectrum(a, drive, medium, deltas);
    for (const auto& [delta, resp] : spectrum) {
      t.rows.push_back({s.label, fmt(delta), fmt(resp.alpha),
                        fmt(alpha0 > 0.0 ? resp.alpha / alpha0 : 0.0), fmt(resp.chi.real()),
                        fmt(resp.chi.imag()), fmt(resp.refr_index)});
    }
  }
  summary = "spectrum: " + std::to_string(series.size()) + " series x " +
            std::to_string(deltas.size()) + " detunings";
  return {emit_table(ctx, "spectrum", t)};
}

std::vector<OutFile> run_bleach_curve(const json& params, const EmitContext& ctx,
                                      std::string& summary) {
  const std::string path = "params";
  IntensityScales scales;
  scales.i_sat3 = require_num(params, "i_sat", path);
  scales.i_coh = require_num(params, "i_coh", path);
  scales.i_pump = require_num(params, "i_p", path);
  scales.i_sat2 = opt_num(params, "i_sat2", path, scales.i_sat3);
  scales.zeta = 1.0;
  const double alpha0 = opt_num(params, "alpha0", path, 1.0);
  const bool two_state = opt_bool(params, "include_two_state", path, true);
  const bool equal_fields = opt_bool(params, "include_equal_fields", path, true);
  const std::vector<double> grid =
      build_grid(require_field(params, "i", path), path + ".i", true);

  Table t;
  t.columns = {"i", "alpha", "alpha_over_alpha0"};
  if (two_state) t.columns.push_back("two_state_over_alpha0");
  if (equal_fields) t.columns.push_back("equal_fields_over_alpha0");
  for (double i : grid) {
    const double a = analytic::alpha_signal_intensity(i, scales.i_pump, scales, alpha0);
    std::vector<std::string> row = {fmt(i), fmt(a), fmt(a / alpha0)};
    if (two_state) row.push_back(fmt(1.0 / (1.0 + i / scales.i_sat2)));
    if (equal_fields) row.push_back(fmt(analytic::alpha_equal_fields(i, scales, 1.0)));
    t.rows.push_back(std::move(row));
  }
  summary = "bleach_curve: " + std::to_string(grid.size()) + " intensities";
  return {emit_table(ctx, "bleach_curve", t)};
}

std::vector<OutFile> run_propagate(const json& params, const EmitContext& ctx,
                                   std::string& summary) {
  const std::string path = "params";
  IntensityScales scales;
  scales.i_sat3 = require_num(params, "i_sat", path);
  scales.i_coh = require_num(params, "i_coh", path);
  scales.zeta = 1.0;
  const double alpha0 = require_num(params, "alpha0", path);

  prop::PropagationConfig config;
  config.length_l = require_num(params, "length", path);
  config.i0 = require_num(params, "i0", path);
  config.ip0 = require_num(params, "ip0", path);
  config.rel_tol = opt_num(params, "rel_tol", path, 1e-9);
  const std::string arrangement = opt_str(params, "arrangement", path, "uniform");
  if (arrangement == "uniform")
    config.arrangement = prop::Arrangement::uniform_pump;
  else if (arrangement == "copropagating")
    config.arrangement = prop::Arrangement::copropagating;
  else
    throw SchemaError(path + ".arrangement", "must be \"uniform\" or \"copropagating\"");
  scales.i_pump = config.ip0;

  const prop::PropagationProfile profile =
      config.arrangement == prop::Arrangement::uniform_pump
          ? prop::integrate_uniform(config, scales, alpha0)
          : prop::integrate_copropagating(config, scales, alpha0);

  Table t;
  t.columns = {"z", "i", "i_p", "alpha_s", "alpha_p"};
  for (const auto& s : profile.samples)
    t.rows.push_back({fmt(s.z), fmt(s.intensity), fmt(s.pump_intensity), fmt(s.alpha_s),
                      fmt(s.alpha_p)});
  summary = "propagate: T=" + fmt(profile.transmittance) + " t0=" + fmt(profile.t0);
  return {emit_table(ctx, "profile", t)};
}

std::vector<OutFile> run_transmittance(const json& params, const EmitContext& ctx,
                                       std::string& summary) {
  const std::string path = "params";
  const double t0 = require_num(params, "t0", path);
  if (!(t0 > 0.0 && t0 < 1.0)) throw SchemaError(path + ".t0", "must be in (0, 1)");
  IntensityScales scales;
  scales.i_sat3 = require_num(params, "i_sat", path);
  scales.i_coh = require_num(params, "i_coh", path);
  scales.i_sat2 = opt_num(params, "i_sat2", path, scales.i_sat3);
  scales.zeta = 1.0;
  const std::string arrangement = opt_str(params, "arrangement", path, "uniform");
  const std::vector<double> i0_grid =
      build_grid(require_field(params, "i0", path), path + ".i0", true);

  const json& pumps_j = require_field(params, "i_p", path);
  if (!pumps_j.is_array() || pumps_j.empty())
    throw SchemaError(path + ".i_p", "expected a non-empty array of pump intensities");
  std::vector<double> pumps;
  for (const auto& v : pumps_j) {
    if (!v.is_number()) throw SchemaError(path + ".i_p", "entries must be numbers");
    pumps.push_back(v.get<double>());
  }

  Table t;
  t.columns = {"series", "law", "i0", "transmittance"};

  if (arrangement == "uniform") {
    const double length = -std::log(t0);  // alpha0 = 1 in scaled units
    std::vector<std::string> laws = {"ode", "exact", "compact"};
    if (params.contains("laws")) {
      laws.clear();
      for (const auto& v : params.at("laws")) laws.push_back(v.get<std::string>());
    }
    for (double ip : pumps) {
      IntensityScales s = scales;
      s.i_pump = ip;
      const std::string label = "ip=" + fmt(ip);
      for (const std::string& law : laws) {
        for (double i0 : i0_grid) {
          double trans = 0.0;
          if (law == "ode") {
            prop::PropagationConfig c;
            c.length_l = length;
            c.i0 = i0;
            c.ip0 = ip;
            c.arrangement = prop::Arrangement::uniform_pump;
            trans = prop::integrate_uniform(c, s, 1.0).transmittance;
          } else if (law == "exact") {
            trans = prop::transmittance_implicit(t0, i0, ip, s, prop::TransferLaw::exact);
          } else if (law == "compact") {
            trans = prop::transmittance_implicit(t0, i0, ip, s, prop::TransferLaw::compact);
          } else {
            throw SchemaError(path + ".laws", "unknown law: " + law);
          }
          t.rows.push_back({label, law, fmt(i0), fmt(trans)});
        }
      }
    }
    if (opt_bool(params, "include_two_state", path, true)) {
      for (double i0 : i0_grid)
        t.rows.push_back({"two_state", "implicit", fmt(i0),
                          fmt(prop::transmittance_two_state(t0, i0, scales.i_sat2))});
    }
  } else if (arrangement == "copropagating") {
    const json& depths_j = require_field(params, "alpha0_l", path);
    if (!depths_j.is_array() || depths_j.size() != pumps.size())
      throw SchemaError(path + ".alpha0_l", "expected an array matching i_p");
    for (std::size_t k = 0; k < pumps.size(); ++k) {
      IntensityScales s = scales;
      s.i_pump = pumps[k];
      const double depth = depths_j[k].get<double>();
      const std::string label = "ip=" + fmt(pumps[k]) + ";a0l=" + fmt(depth);
      for (double i0 : i0_grid) {
        prop::PropagationConfig c;
        c.length_l = depth;  // alpha0 = 1 in scaled units
        c.i0 = i0;
        c.ip0 = pumps[k];
        c.arrangement = prop::Arrangement::copropagating;
        t.rows.push_back({label, "ode", fmt(i0),
                          fmt(prop::integrate_copropagating(c, s, 1.0).transmittance)});
      }
    }
  } else {
    throw SchemaError(path + ".arrangement", "must be \"uniform\" or \"copropagating\"");
  }

  summary = "transmittance: " + std::to_string(pumps.size()) + " pump levels x " +
            std::to_string(i0_grid.size()) + " inputs";
  return {emit_table(ctx, "transmittance", t)};
}

std::vector<OutFile> run_mb_filter(const json& params, std::uint64_t seed, const EmitContext& ctx,
                                   std::string& summary) {
  const std::string path = "params";
  AtomParams atom = atom_from_json(require_field(params, "atom", path), path + ".atom");
  const double omega_p = require_num(params, "omega_p", path);
  const double xi = require_num(params, "xi", path);
  const double bulk_index = opt_num(params, "bulk_index", path, 1.0);

  const json& grid_j = require_field(params, "grid", path);
  mb::MBGrid grid;
  grid.n_time = static_cast<int>(require_int(grid_j, "n_time", path + ".grid"));
  grid.n_space = static_cast<int>(require_int(grid_j, "n_space", path + ".grid"));
  grid.t_total = require_num(grid_j, "t_total", path + ".grid");
  grid.length = require_num(grid_j, "length", path + ".grid");
  grid.validate();

  const json& sig_j = require_field(params, "signal", path);
  mb::NoisySignalSpec spec;
  spec.peak_rabi = require_num(sig_j, "peak_rabi", path + ".signal");
  spec.t_center = require_num(sig_j, "t_center", path + ".signal");
  spec.t_width = require_num(sig_j, "t_width", path + ".signal");
  spec.noise_rms_frac = opt_num(sig_j, "noise_rms_frac", path + ".signal", 0.2);
  spec.seed = seed;
  spec.validate();

  mb::FiltrationOptions options;
  const std::string conv = opt_str(params, "amplitude_convention", path, "quarter");
  if (conv == "quarter")
    options.convention = mb::AmplitudeConvention::quarter;
  else if (conv == "half")
    options.convention = mb::AmplitudeConvention::half;
  else
    throw SchemaError(path + ".amplitude_convention",
                      "must be \"quarter\" or \"half\"");
  options.space_samples = static_cast<int>(opt_num(params, "space_samples", path, 9));

  const mb::FiltrationResult res =
      mb::run_filtration(spec, grid, atom, omega_p, xi, bulk_index, options);

  // Field matrix: one row per time node, one column per stored depth.
  Table field;
  field.columns = {"t"};
  for (double z : res.sample_z) field.columns.push_back("z=" + fmt(z));
  const double dt = grid.dt();
  for (int n = 0; n < grid.n_time; ++n) {
    std::vector<std::string> row = {fmt(n * dt)};
    for (const auto& col : res.field) row.push_back(fmt(col[n]));
    field.rows.push_back(std::move(row));
  }

  Table psd;
  psd.columns = {"freq", "psd_input", "psd_output"};
  for (std::size_t k = 0; k < res.psd_input.psd.size(); ++k)
    psd.rows.push_back(
        {fmt(res.psd_input.freq[k]), fmt(res.psd_input.psd[k]), fmt(res.psd_output.psd[k])});

  const double f_resolved = mb::kResolvedBandFraction * 0.5 / dt;
  const double f_lobe = 2.0 / (2.0 * kPi * spec.t_width);
  const double ratio_top =
      mb::band_psd_ratio(res.psd_input, res.psd_output, f_resolved / 10.0, f_resolved);
  const double ratio_lobe =
      mb::band_psd_ratio(res.psd_input, res.psd_output, 0.0, f_lobe);

  json summary_j;
  summary_j["kind"] = "mb_filter";
  summary_j["energy_in"] = res.energy_in;
  summary_j["energy_out"] = res.energy_out;
  summary_j["energy_transmittance"] = res.energy_in > 0.0 ? res.energy_out / res.energy_in : 0.0;
  summary_j["psd_ratio_top_decade"] = ratio_top;
  summary_j["psd_ratio_main_lobe"] = ratio_lobe;
  summary_j["main_lobe_band_hz"] = f_lobe;
  summary_j["resolved_band_hz"] = f_resolved;
  summary_j["max_fixed_point_iterations"] = res.max_iterations;
  summary_j["seed"] = seed;

  if (opt_bool(params, "convergence_check", path, false)) {
    mb::MBGrid fine = grid;
    fine.n_time *= 2;
    fine.n_space *= 2;
    const mb::FiltrationResult ref = mb::run_filtration_boundary(
        mb::upsample_double(res.input), fine, atom, omega_p, xi, bulk_index, options);
    double num = 0.0, den = 0.0;
    for (int n = 0; n < grid.n_time; ++n) {
      const double d = res.output[n] - ref.output[2 * n];
      num += d * d;
      den += ref.output[2 * n] * ref.output[2 * n];
    }
    summary_j["convergence_l2_rel_change"] = den > 0.0 ? std::sqrt(num / den) : 0.0;
  }

  summary = "mb_filter: top-decade PSD ratio " + fmt(ratio_top) + ", main-lobe ratio " +
            fmt(ratio_lobe);
  return {emit_table(ctx, "mb_field", field), emit_table(ctx, "mb_psd", psd),
          emit_json(ctx, "mb_summary", summary_j)};
}

std::vector<OutFile> run_design(const json& params, const EmitContext& ctx,
                                std::string& summary) {
  const std::string path = "params";
  const std::string preset_name = require_str(params, "preset", path);
  const double t0 = require_num(params, "t0", path);
  const std::string arrangement = opt_str(params, "arrangement", path, "uniform");
  const presets::DesignReport r =
      presets::design_report(presets::by_name(preset_name), t0, arrangement);

  json j;
  j["kind"] = "design";
  j["preset"] = r.preset.name;
  j["arrangement"] = r.arrangement;
  j["target_t0"] = r.target_t0;
  j["atom"] = {{"gamma_sp", r.preset.atom.gamma_sp},
               {"gamma_deph", r.preset.atom.gamma_deph},
               {"gamma_total", r.preset.atom.gamma_total()}};
  j["medium"] = {{"density", r.preset.medium.density},
                 {"dipole", r.preset.medium.dipole_ab},
                 {"eps_r", r.preset.medium.eps_r},
                 {"bulk_index", r.preset.medium.bulk_index},
                 {"omega_trans_s", r.preset.medium.omega_trans_s}};
  j["derived"] = {{"zeta", r.zeta},          {"xi", r.xi},
                  {"alpha0", r.alpha0},      {"i_sat3", r.i_sat3},
                  {"i_sat2", r.i_sat2},      {"i_coh", r.i_coh},
                  {"length_for_t0", r.length_for_t0}};
  j["provenance"] = r.preset.provenance;

  summary = format_design_report(r);
  return {emit_json(ctx, "design", j)};
}

// ---------------------------------------------------------------------------

json error_payload(int code, const std::string& type, const std::string& field,
                   const std::string& message) {
  json j;
  j["error"] = {{"exit_code", code}, {"type", type}, {"message", message}};
  if (!field.empty()) j["error"]["field"] = field;
  return j;
}

RunResult run_config(json config, const RunOverrides& overrides) {
  RunResult result;
  try {
    if (!config.is_object()) throw SchemaError("(root)", "config must be a JSON object");
    if (overrides.seed) config["seed"] = *overrides.seed;
    if (overrides.out_dir) config["output"]["dir"] = *overrides.out_dir;
    if (overrides.format) config["output"]["format"] = *overrides.format;
    if (overrides.params_patch) {
      json patch = json::parse(*overrides.params_patch, nullptr, false);
      if (patch.is_discarded() || !patch.is_object())
        throw SchemaError("(overrides)", "params patch must be a JSON object");
      for (auto& [key, value] : patch.items()) config["params"][key] = value;
    }

    const std::string kind = require_str(config, "kind", "(root)");
    std::uint64_t seed = 1;
    if (config.contains("seed")) {
      if (!config["seed"].is_number_unsigned() && !config["seed"].is_number_integer())
        throw SchemaError("seed", "expected a non-negative integer");
      const long long s = config["seed"].get<long long>();
      if (s < 0) throw SchemaError("seed", "expected a non-negative integer");
      seed = static_cast<std::uint64_t>(s);
    }
    std::string out_dir = ".";
    std::string format = "csv";
    if (config.contains("output")) {
      const json& out = config.at("output");
      out_dir = opt_str(out, "dir", "output", ".");
      format = opt_str(out, "format", "output", "csv");
      if (format != "csv" && format != "json")
        throw SchemaError("output.format", "must be \"csv\" or \"json\"");
    }
    const json& params = require_field(config, "params", "(root)");

    EmitContext ctx;
    ctx.hash_hex = fmt_hex(fnv1a64(config.dump()));
    ctx.header = std::string("# eitbleach ") + kVersion + " kind=" + kind +
                 " config=" + ctx.hash_hex;
    ctx.format = format;

    std::vector<OutFile> files;
    if (kind == "spectrum")
      files = run_spectrum(params, ctx, result.summary);
    else if (kind == "bleach_curve")
      files = run_bleach_curve(params, ctx, result.summary);
    else if (kind == "propagate")
      files = run_propagate(params, ctx, result.summary);
    else if (kind == "transmittance")
      files = run_transmittance(params, ctx, result.summary);
    else if (kind == "mb_filter")
      files = run_mb_filter(params, seed, ctx, result.summary);
    else if (kind == "design")
      files = run_design(params, ctx, result.summary);
    else
      throw SchemaError("kind", "unknown scenario kind: " + kind);

    // Everything computed; now write atomically.
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    for (const auto& f : files) {
      const fs::path final_path = fs::path(out_dir) / f.name;
      const fs::path tmp_path = final_path.string() + ".tmp";
      {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp_path.string());
        out << f.content;
        if (!out) throw std::runtime_error("write failed: " + tmp_path.string());
      }
      fs::rename(tmp_path, final_path);
      result.files.push_back(final_path.string());
    }
    result.exit_code = kExitOk;
  } catch (const SchemaError& e) {
    result.exit_code = kExitSchema;
    result.error_json = error_payload(kExitSchema, "schema", e.field_name, e.what()).dump();
  } catch (const std::exception& e) {
    result.exit_code = kExitSolver;
    result.error_json = error_payload(kExitSolver, "solver", "", e.what()).dump();
  }
  return result;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

RunResult run_file(const std::string& config_path, const RunOverrides& overrides) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    RunResult r;
    r.exit_code = kExitSchema;
    r.error_json =
        error_payload(kExitSchema, "schema", "(file)", "cannot read " + config_path).dump();
    return r;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_json_text(buf.str(), overrides);
}

RunResult run_json_text(const std::string& config_text, const RunOverrides& overrides) {
  json config = json::parse(config_text, nullptr, false);
  if (config.is_discarded()) {
    RunResult r;
    r.exit_code = kExitSchema;
    r.error_json =
        error_payload(kExitSchema, "schema", "(root)", "config is not valid JSON").dump();
    return r;
  }
  return run_config(std::move(config), overrides);
}

std::string format_design_report(const presets::DesignReport& r) {
  std::ostringstream out;
  out << "design report: preset " << r.preset.name << " (" << r.arrangement << ")\n";
  auto line = [&](const std::string& name, double value, const std::string& unit,
                  const std::string& prov_key) {
    out << "  " << name << " = " << fmt(value) << " " << unit;
    auto it = r.preset.provenance.find(prov_key);
    if (it != r.preset.provenance.end()) out << "   [" << it->second << "]";
    out << "\n";
  };
  line("gamma_sp", r.preset.atom.gamma_sp, "rad/s", "gamma_sp");
  line("gamma_deph", r.preset.atom.gamma_deph, "rad/s", "gamma_deph");
  line("density", r.preset.medium.density, "1/m^3", "density");
  line("dipole", r.preset.medium.dipole_ab, "C m", "dipole");
  line("zeta", r.zeta, "W s^2/m^2", "");
  line("xi", r.xi, "1/(m s)", "xi");
  line("alpha0", r.alpha0, "1/m", "");
  line("i_sat (three-state)", r.i_sat3, "W/m^2", "");
  line("i_sat (two-state)", r.i_sat2, "W/m^2", "");
  line("i_coh", r.i_coh, "W/m^2", "");
  out << "  length for T0=" << fmt(r.target_t0) << ": " << fmt(r.length_for_t0) << " m\n";
  return out.str();
}

}  // namespace eitb::scenario
