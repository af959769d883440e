#include "eitbleach.h"

#include <cstring>
#include <new>
#include <string>

#include "analytic.hpp"
#include "constants.hpp"
#include "core_model.hpp"
#include "presets.hpp"
#include "propagation.hpp"
#include "scenario.hpp"
#include "steady_state.hpp"
#include "types.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const char* msg) { g_last_error = msg ? msg : ""; }

eitb_status map_exception() {
  try {
    throw;
  } catch (const eitb::SchemaError& e) {
    set_error(e.what());
    return EITB_ERR_INVALID_ARGUMENT;
  } catch (const eitb::DegenerateSteadyState& e) {
    set_error(e.what());
    return EITB_ERR_DEGENERATE;
  } catch (const eitb::ConvergenceError& e) {
    set_error(e.what());
    return EITB_ERR_NO_CONVERGENCE;
  } catch (const eitb::DomainError& e) {
    set_error(e.what());
    return EITB_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return EITB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return EITB_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return EITB_ERR_INTERNAL;
  }
}

template <typename Fn>
eitb_status guarded(Fn&& fn) {
  try {
    fn();
    set_error("");
    return EITB_OK;
  } catch (...) {
    return map_exception();
  }
}

eitb_status require_args(bool ok) {
  if (!ok) {
    set_error("null pointer argument");
    return EITB_ERR_INVALID_ARGUMENT;
  }
  return EITB_OK;
}

eitb::AtomParams to_atom(const eitb_atom_params& a) { return {a.gamma_sp, a.gamma_deph}; }

eitb::DriveParams to_drive(const eitb_drive_params& d) {
  return {d.omega_s, d.omega_p, d.delta_one, d.delta_two};
}

eitb::MediumParams to_medium(const eitb_medium_params& m) {
  eitb::MediumParams out;
  out.density = m.density;
  out.dipole_ab = m.dipole_ab;
  out.dipole_bc = m.dipole_bc;
  out.eps_r = m.eps_r;
  out.bulk_index = m.bulk_index;
  out.omega_trans_s = m.omega_trans_s;
  out.omega_trans_p = m.omega_trans_p;
  return out;
}

eitb::IntensityScales to_scales(const eitb_intensity_scales& s) {
  eitb::IntensityScales out;
  out.i_sat3 = s.i_sat3;
  out.i_sat2 = s.i_sat2;
  out.i_coh = s.i_coh;
  out.i_pump = s.i_pump;
  out.zeta = s.zeta;
  return out;
}

eitb_medium_params from_medium(const eitb::MediumParams& m) {
  return {m.density, m.dipole_ab, m.dipole_bc, m.eps_r,
          m.bulk_index, m.omega_trans_s, m.omega_trans_p};
}

}  // namespace

struct eitb_profile {
  eitb::prop::PropagationProfile data;
};

struct eitb_run_result {
  eitb::scenario::RunResult data;
};

extern "C" {

const char* eitb_version(void) { return eitb::kVersion; }

const char* eitb_last_error(void) { return g_last_error.c_str(); }

eitb_status eitb_compute_zeta(const eitb_medium_params* medium, double* out) {
  if (auto s = require_args(medium && out)) return s;
  return guarded([&] { *out = eitb::model::compute_zeta(to_medium(*medium)); });
}

eitb_status eitb_compute_xi(const eitb_medium_params* medium, double* out) {
  if (auto s = require_args(medium && out)) return s;
  return guarded([&] { *out = eitb::model::compute_xi(to_medium(*medium)); });
}

eitb_status eitb_dipole_from_decay(double gamma_sp, double omega_trans, double eps_r, double eta,
                                   double* out) {
  if (auto s = require_args(out != nullptr)) return s;
  return guarded([&] { *out = eitb::model::dipole_from_decay(gamma_sp, omega_trans, eps_r, eta); });
}

eitb_status eitb_intensity_scales_compute(const eitb_atom_params* atom,
                                          const eitb_drive_params* drive,
                                          const eitb_medium_params* medium,
                                          eitb_intensity_scales* out) {
  if (auto s = require_args(atom && drive && medium && out)) return s;
  return guarded([&] {
    const auto scales =
        eitb::model::compute_intensity_scales(to_atom(*atom), to_drive(*drive), to_medium(*medium));
    *out = {scales.i_sat3, scales.i_sat2, scales.i_coh, scales.i_pump, scales.zeta};
  });
}

eitb_status eitb_small_signal_alpha(double xi, const eitb_atom_params* atom, double* out) {
  if (auto s = require_args(atom && out)) return s;
  return guarded([&] { *out = eitb::model::small_signal_alpha(xi, to_atom(*atom)); });
}

eitb_status eitb_rabi_to_intensity(double omega, double zeta, double* out) {
  if (auto s = require_args(out != nullptr)) return s;
  return guarded([&] { *out = eitb::model::rabi_to_intensity(omega, zeta); });
}

eitb_status eitb_intensity_to_rabi(double intensity, double zeta, double* out) {
  if (auto s = require_args(out != nullptr)) return s;
  return guarded([&] { *out = eitb::model::intensity_to_rabi(intensity, zeta); });
}

eitb_status eitb_alpha_two_state(const eitb_atom_params* atom, const eitb_drive_params* drive,
                                 double xi, double* out) {
  if (auto s = require_args(atom && drive && out)) return s;
  return guarded([&] { *out = eitb::analytic::alpha_two_state(to_atom(*atom), to_drive(*drive), xi); });
}

eitb_status eitb_alpha_signal(const eitb_atom_params* atom, const eitb_drive_params* drive,
                              double xi, double* out) {
  if (auto s = require_args(atom && drive && out)) return s;
  return guarded([&] { *out = eitb::analytic::alpha_signal(to_atom(*atom), to_drive(*drive), xi); });
}

eitb_status eitb_alpha_signal_intensity(double intensity, double i_pump,
                                        const eitb_intensity_scales* scales, double alpha0,
                                        double* out) {
  if (auto s = require_args(scales && out)) return s;
  return guarded([&] {
    *out = eitb::analytic::alpha_signal_intensity(intensity, i_pump, to_scales(*scales), alpha0);
  });
}

eitb_status eitb_alpha_pump_intensity(double intensity, double i_pump,
                                      const eitb_intensity_scales* scales, double alpha0,
                                      double* out) {
  if (auto s = require_args(scales && out)) return s;
  return guarded([&] {
    *out = eitb::analytic::alpha_pump_intensity(intensity, i_pump, to_scales(*scales), alpha0);
  });
}

eitb_status eitb_alpha_equal_fields(double intensity, const eitb_intensity_scales* scales,
                                    double alpha0, double* out) {
  if (auto s = require_args(scales && out)) return s;
  return guarded(
      [&] { *out = eitb::analytic::alpha_equal_fields(intensity, to_scales(*scales), alpha0); });
}

eitb_status eitb_peak_positions(const eitb_atom_params* atom, const eitb_drive_params* drive,
                                eitb_peaks* out) {
  if (auto s = require_args(atom && drive && out)) return s;
  return guarded([&] {
    const auto p = eitb::analytic::peak_positions(to_atom(*atom), to_drive(*drive));
    *out = {p.delta_plus, p.delta_minus, p.aux_a, p.merged ? 1 : 0};
  });
}

eitb_status eitb_bandwidth(const eitb_atom_params* atom, const eitb_drive_params* drive,
                           eitb_bandwidth_regime regime, double* out) {
  if (auto s = require_args(atom && drive && out)) return s;
  return guarded([&] {
    using R = eitb::analytic::BandwidthRegime;
    R r = R::three_state_small_gamma;
    if (regime == EITB_BANDWIDTH_TWO_STATE) r = R::two_state;
    if (regime == EITB_BANDWIDTH_DEPHASING_DOMINATED) r = R::dephasing_dominated;
    *out = eitb::analytic::bandwidth(to_atom(*atom), to_drive(*drive), r);
  });
}

eitb_status eitb_quadratic_threshold(const eitb_intensity_scales* scales, double* i_q,
                                     double* i_simple) {
  if (auto s = require_args(scales && i_q && i_simple)) return s;
  return guarded([&] {
    const auto t = eitb::analytic::quadratic_threshold(to_scales(*scales));
    *i_q = t.i_q13;
    *i_simple = t.i_simple;
  });
}

eitb_status eitb_group_velocity_signal(const eitb_atom_params* atom,
                                       const eitb_drive_params* drive,
                                       const eitb_medium_params* medium, double* v_g,
                                       double* dchi_ddetuning) {
  if (auto s = require_args(atom && drive && medium && v_g)) return s;
  return guarded([&] {
    const auto r =
        eitb::analytic::group_velocity_signal(to_atom(*atom), to_drive(*drive), to_medium(*medium));
    *v_g = r.v_g;
    if (dchi_ddetuning) *dchi_ddetuning = r.dchi_ddetuning;
  });
}

eitb_status eitb_group_velocity_pump(const eitb_atom_params* atom, const eitb_drive_params* drive,
                                     const eitb_medium_params* medium, double* v_g,
                                     double* dchi_ddetuning) {
  if (auto s = require_args(atom && drive && medium && v_g)) return s;
  return guarded([&] {
    const auto r =
        eitb::analytic::group_velocity_pump(to_atom(*atom), to_drive(*drive), to_medium(*medium));
    *v_g = r.v_g;
    if (dchi_ddetuning) *dchi_ddetuning = r.dchi_ddetuning;
  });
}

eitb_status eitb_penetration_depth(eitb_penetration_regime regime,
                                   const eitb_intensity_scales* scales, double i0, double alpha0,
                                   double* out) {
  if (auto s = require_args(scales && out)) return s;
  return guarded([&] {
    using R = eitb::analytic::PenetrationRegime;
    R r = R::linear;
    switch (regime) {
      case EITB_PENETRATION_LINEAR: r = R::linear; break;
      case EITB_PENETRATION_PUMP_BLEACHED: r = R::pump_bleached; break;
      case EITB_PENETRATION_COHERENT: r = R::coherent; break;
      case EITB_PENETRATION_SATURATED: r = R::saturated; break;
      case EITB_PENETRATION_QUADRATIC: r = R::quadratic; break;
    }
    *out = eitb::analytic::penetration_depth(r, to_scales(*scales), i0, alpha0);
  });
}

eitb_status eitb_dark_state(const eitb_drive_params* drive, double* c_a, double* c_c) {
  if (auto s = require_args(drive && c_a && c_c)) return s;
  return guarded([&] {
    const auto [a, c] = eitb::analytic::dark_state(to_drive(*drive));
    *c_a = a;
    *c_c = c;
  });
}

eitb_status eitb_steady_state(const eitb_atom_params* atom, const eitb_drive_params* drive,
                              eitb_levels levels, double rho_out[18]) {
  if (auto s = require_args(atom && drive && rho_out)) return s;
  return guarded([&] {
    const auto lv = levels == EITB_LEVELS_TWO ? eitb::steady::Levels::two
                                              : eitb::steady::Levels::three;
    const auto rho = eitb::steady::solve_steady_state(
        eitb::steady::build_liouvillian(to_atom(*atom), to_drive(*drive), lv));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        rho_out[2 * (3 * i + j)] = rho(i, j).real();
        rho_out[2 * (3 * i + j) + 1] = rho(i, j).imag();
      }
  });
}

eitb_status eitb_numeric_response(const eitb_atom_params* atom, const eitb_drive_params* drive,
                                  const eitb_medium_params* medium, eitb_levels levels,
                                  double* alpha, double* chi_re, double* chi_im,
                                  double* refr_index) {
  if (auto s = require_args(atom && drive && medium && alpha)) return s;
  return guarded([&] {
    const auto lv = levels == EITB_LEVELS_TWO ? eitb::steady::Levels::two
                                              : eitb::steady::Levels::three;
    const auto r =
        eitb::steady::numeric_response(to_atom(*atom), to_drive(*drive), to_medium(*medium), lv);
    *alpha = r.alpha;
    if (chi_re) *chi_re = r.chi.real();
    if (chi_im) *chi_im = r.chi.imag();
    if (refr_index) *refr_index = r.refr_index;
  });
}

eitb_status eitb_propagate(eitb_arrangement arrangement, double length, double i0, double ip0,
                           const eitb_intensity_scales* scales, double alpha0, double rel_tol,
                           eitb_profile** out) {
  if (auto s = require_args(scales && out)) return s;
  *out = nullptr;
  return guarded([&] {
    eitb::prop::PropagationConfig config;
    config.length_l = length;
    config.i0 = i0;
    config.ip0 = ip0;
    config.rel_tol = rel_tol > 0.0 ? rel_tol : 1e-9;
    config.arrangement = arrangement == EITB_ARRANGEMENT_COPROPAGATING
                             ? eitb::prop::Arrangement::copropagating
                             : eitb::prop::Arrangement::uniform_pump;
    auto profile = arrangement == EITB_ARRANGEMENT_COPROPAGATING
                       ? eitb::prop::integrate_copropagating(config, to_scales(*scales), alpha0)
                       : eitb::prop::integrate_uniform(config, to_scales(*scales), alpha0);
    *out = new eitb_profile{std::move(profile)};
  });
}

void eitb_profile_destroy(eitb_profile* profile) { delete profile; }

size_t eitb_profile_size(const eitb_profile* profile) {
  return profile ? profile->data.samples.size() : 0;
}

eitb_status eitb_profile_row(const eitb_profile* profile, size_t index, double row_out[5]) {
  if (auto s = require_args(profile && row_out)) return s;
  if (index >= profile->data.samples.size()) {
    set_error("profile row index out of range");
    return EITB_ERR_INVALID_ARGUMENT;
  }
  const auto& r = profile->data.samples[index];
  row_out[0] = r.z;
  row_out[1] = r.intensity;
  row_out[2] = r.pump_intensity;
  row_out[3] = r.alpha_s;
  row_out[4] = r.alpha_p;
  return EITB_OK;
}

eitb_status eitb_profile_transmittance(const eitb_profile* profile, double* t, double* t0) {
  if (auto s = require_args(profile && t)) return s;
  *t = profile->data.transmittance;
  if (t0) *t0 = profile->data.t0;
  return EITB_OK;
}

eitb_status eitb_transmittance_implicit(double t0, double i0, double i_pump,
                                        const eitb_intensity_scales* scales, eitb_transfer_law law,
                                        double* out) {
  if (auto s = require_args(scales && out)) return s;
  return guarded([&] {
    *out = eitb::prop::transmittance_implicit(t0, i0, i_pump, to_scales(*scales),
                                              law == EITB_TRANSFER_COMPACT
                                                  ? eitb::prop::TransferLaw::compact
                                                  : eitb::prop::TransferLaw::exact);
  });
}

eitb_status eitb_transmittance_two_state(double t0, double i0, double i_sat2, double* out) {
  if (auto s = require_args(out != nullptr)) return s;
  return guarded([&] { *out = eitb::prop::transmittance_two_state(t0, i0, i_sat2); });
}

eitb_status eitb_design(const char* preset, double t0, const char* arrangement,
                        eitb_design_report* out) {
  if (auto s = require_args(preset && out)) return s;
  return guarded([&] {
    const auto r = eitb::presets::design_report(eitb::presets::by_name(preset), t0,
                                                arrangement ? arrangement : "uniform");
    out->atom = {r.preset.atom.gamma_sp, r.preset.atom.gamma_deph};
    out->medium = from_medium(r.preset.medium);
    out->zeta = r.zeta;
    out->xi = r.xi;
    out->alpha0 = r.alpha0;
    out->i_sat3 = r.i_sat3;
    out->i_sat2 = r.i_sat2;
    out->i_coh = r.i_coh;
    out->length_for_t0 = r.length_for_t0;
  });
}

eitb_status eitb_design_text(const char* preset, double t0, const char* arrangement, char* buf,
                             size_t buf_size, size_t* needed) {
  if (auto s = require_args(preset != nullptr)) return s;
  return guarded([&] {
    const auto r = eitb::presets::design_report(eitb::presets::by_name(preset), t0,
                                                arrangement ? arrangement : "uniform");
    const std::string text = eitb::scenario::format_design_report(r);
    if (needed) *needed = text.size();
    if (buf && buf_size > 0) {
      const size_t n = std::min(buf_size - 1, text.size());
      std::memcpy(buf, text.data(), n);
      buf[n] = '\0';
    }
  });
}

static eitb_status run_scenario_common(eitb::scenario::RunResult result, eitb_run_result** out) {
  *out = new eitb_run_result{std::move(result)};
  set_error("");
  return EITB_OK;
}

eitb_status eitb_run_scenario_file(const char* config_path, const char* out_dir,
                                   const uint64_t* seed, const char* format,
                                   const char* params_patch, eitb_run_result** out) {
  if (auto s = require_args(config_path && out)) return s;
  *out = nullptr;
  eitb::scenario::RunOverrides ov;
  if (out_dir) ov.out_dir = out_dir;
  if (seed) ov.seed = *seed;
  if (format) ov.format = format;
  if (params_patch) ov.params_patch = params_patch;
  return run_scenario_common(eitb::scenario::run_file(config_path, ov), out);
}

eitb_status eitb_run_scenario_json(const char* config_text, const char* out_dir,
                                   const uint64_t* seed, const char* format,
                                   const char* params_patch, eitb_run_result** out) {
  if (auto s = require_args(config_text && out)) return s;
  *out = nullptr;
  eitb::scenario::RunOverrides ov;
  if (out_dir) ov.out_dir = out_dir;
  if (seed) ov.seed = *seed;
  if (format) ov.format = format;
  if (params_patch) ov.params_patch = params_patch;
  return run_scenario_common(eitb::scenario::run_json_text(config_text, ov), out);
}

void eitb_run_result_destroy(eitb_run_result* result) { delete result; }

int eitb_run_result_exit_code(const eitb_run_result* result) {
  return result ? result->data.exit_code : EITB_ERR_INVALID_ARGUMENT;
}

const char* eitb_run_result_error_json(const eitb_run_result* result) {
  return result ? result->data.error_json.c_str() : "";
}

const char* eitb_run_result_summary(const eitb_run_result* result) {
  return result ? result->data.summary.c_str() : "";
}

size_t eitb_run_result_file_count(const eitb_run_result* result) {
  return result ? result->data.files.size() : 0;
}

const char* eitb_run_result_file(const eitb_run_result* result, size_t index) {
  if (!result || index >= result->data.files.size()) return "";
  return result->data.files[index].c_str();
}

}  // extern "C"
