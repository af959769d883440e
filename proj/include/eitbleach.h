/* eitbleach C API: three-level EIT absorber simulation core.
 *
 * All functions return an eitb_status; results come back through out
 * parameters. Heavyweight results (propagation profiles, scenario runs) are
 * opaque handles with explicit destroy functions. On any failure a
 * thread-local message is available from eitb_last_error().
 */
#ifndef EITBLEACH_H
#define EITBLEACH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eitb_status {
  EITB_OK = 0,
  EITB_ERR_INVALID_ARGUMENT = 1, /* null pointer or malformed input */
  EITB_ERR_DOMAIN = 2,           /* input outside a formula's validity range */
  EITB_ERR_DEGENERATE = 3,       /* no unique steady state */
  EITB_ERR_NO_CONVERGENCE = 4,   /* iterative solver failed */
  EITB_ERR_IO = 5,               /* file could not be read or written */
  EITB_ERR_INTERNAL = 6
} eitb_status;

const char* eitb_version(void);
/* Message describing the most recent failure on this thread ("" if none). */
const char* eitb_last_error(void);

/* ------------------------------------------------------------------ */
/* Parameter records (plain C structs, SI units, angular rad/s).      */

typedef struct eitb_atom_params {
  double gamma_sp;   /* spontaneous emission rate per channel */
  double gamma_deph; /* ground-state dephasing rate */
} eitb_atom_params;

typedef struct eitb_drive_params {
  double omega_s;
  double omega_p;
  double delta_one;
  double delta_two;
} eitb_drive_params;

typedef struct eitb_medium_params {
  double density;
  double dipole_ab;
  double dipole_bc;
  double eps_r;
  double bulk_index;
  double omega_trans_s;
  double omega_trans_p;
} eitb_medium_params;

typedef struct eitb_intensity_scales {
  double i_sat3;
  double i_sat2;
  double i_coh;
  double i_pump;
  double zeta;
} eitb_intensity_scales;

/* ------------------------------------------------------------------ */
/* Conversions and medium constants.                                  */

eitb_status eitb_compute_zeta(const eitb_medium_params* medium, double* out);
eitb_status eitb_compute_xi(const eitb_medium_params* medium, double* out);
eitb_status eitb_dipole_from_decay(double gamma_sp, double omega_trans, double eps_r, double eta,
                                   double* out);
eitb_status eitb_intensity_scales_compute(const eitb_atom_params* atom,
                                          const eitb_drive_params* drive,
                                          const eitb_medium_params* medium,
                                          eitb_intensity_scales* out);
eitb_status eitb_small_signal_alpha(double xi, const eitb_atom_params* atom, double* out);
eitb_status eitb_rabi_to_intensity(double omega, double zeta, double* out);
eitb_status eitb_intensity_to_rabi(double intensity, double zeta, double* out);

/* ------------------------------------------------------------------ */
/* Closed-form optical response at resonance.                          */

eitb_status eitb_alpha_two_state(const eitb_atom_params* atom, const eitb_drive_params* drive,
                                 double xi, double* out);
eitb_status eitb_alpha_signal(const eitb_atom_params* atom, const eitb_drive_params* drive,
                              double xi, double* out);
eitb_status eitb_alpha_signal_intensity(double intensity, double i_pump,
                                        const eitb_intensity_scales* scales, double alpha0,
                                        double* out);
eitb_status eitb_alpha_pump_intensity(double intensity, double i_pump,
                                      const eitb_intensity_scales* scales, double alpha0,
                                      double* out);
eitb_status eitb_alpha_equal_fields(double intensity, const eitb_intensity_scales* scales,
                                    double alpha0, double* out);

typedef struct eitb_peaks {
  double delta_plus;
  double delta_minus;
  double aux_a;
  int merged;
} eitb_peaks;
eitb_status eitb_peak_positions(const eitb_atom_params* atom, const eitb_drive_params* drive,
                                eitb_peaks* out);

typedef enum eitb_bandwidth_regime {
  EITB_BANDWIDTH_THREE_STATE_SMALL_GAMMA = 0,
  EITB_BANDWIDTH_TWO_STATE = 1,
  EITB_BANDWIDTH_DEPHASING_DOMINATED = 2
} eitb_bandwidth_regime;
eitb_status eitb_bandwidth(const eitb_atom_params* atom, const eitb_drive_params* drive,
                           eitb_bandwidth_regime regime, double* out);

eitb_status eitb_quadratic_threshold(const eitb_intensity_scales* scales, double* i_q,
                                     double* i_simple);

eitb_status eitb_group_velocity_signal(const eitb_atom_params* atom,
                                       const eitb_drive_params* drive,
                                       const eitb_medium_params* medium, double* v_g,
                                       double* dchi_ddetuning);
eitb_status eitb_group_velocity_pump(const eitb_atom_params* atom, const eitb_drive_params* drive,
                                     const eitb_medium_params* medium, double* v_g,
                                     double* dchi_ddetuning);

typedef enum eitb_penetration_regime {
  EITB_PENETRATION_LINEAR = 0,
  EITB_PENETRATION_PUMP_BLEACHED = 1,
  EITB_PENETRATION_COHERENT = 2,
  EITB_PENETRATION_SATURATED = 3,
  EITB_PENETRATION_QUADRATIC = 4
} eitb_penetration_regime;
eitb_status eitb_penetration_depth(eitb_penetration_regime regime,
                                   const eitb_intensity_scales* scales, double i0, double alpha0,
                                   double* out);

eitb_status eitb_dark_state(const eitb_drive_params* drive, double* c_a, double* c_c);

/* ------------------------------------------------------------------ */
/* Exact steady state.                                                 */

typedef enum eitb_levels { EITB_LEVELS_TWO = 2, EITB_LEVELS_THREE = 3 } eitb_levels;

/* Steady-state density matrix, row-major 3x3 interleaved re/im (18 doubles).
 * Two-level results occupy the top-left 2x2 block. */
eitb_status eitb_steady_state(const eitb_atom_params* atom, const eitb_drive_params* drive,
                              eitb_levels levels, double rho_out[18]);

eitb_status eitb_numeric_response(const eitb_atom_params* atom, const eitb_drive_params* drive,
                                  const eitb_medium_params* medium, eitb_levels levels,
                                  double* alpha, double* chi_re, double* chi_im,
                                  double* refr_index);

/* ------------------------------------------------------------------ */
/* Optically-thick propagation.                                        */

typedef enum eitb_arrangement {
  EITB_ARRANGEMENT_UNIFORM = 0,
  EITB_ARRANGEMENT_COPROPAGATING = 1
} eitb_arrangement;

typedef struct eitb_profile eitb_profile; /* opaque */

eitb_status eitb_propagate(eitb_arrangement arrangement, double length, double i0, double ip0,
                           const eitb_intensity_scales* scales, double alpha0, double rel_tol,
                           eitb_profile** out);
void eitb_profile_destroy(eitb_profile* profile);
size_t eitb_profile_size(const eitb_profile* profile);
/* row = {z, i, i_p, alpha_s, alpha_p} */
eitb_status eitb_profile_row(const eitb_profile* profile, size_t index, double row_out[5]);
eitb_status eitb_profile_transmittance(const eitb_profile* profile, double* t, double* t0);

typedef enum eitb_transfer_law {
  EITB_TRANSFER_COMPACT = 0,
  EITB_TRANSFER_EXACT = 1
} eitb_transfer_law;
eitb_status eitb_transmittance_implicit(double t0, double i0, double i_pump,
                                        const eitb_intensity_scales* scales, eitb_transfer_law law,
                                        double* out);
eitb_status eitb_transmittance_two_state(double t0, double i0, double i_sat2, double* out);

/* ------------------------------------------------------------------ */
/* Material presets and the design calculator.                         */

typedef struct eitb_design_report {
  eitb_atom_params atom;
  eitb_medium_params medium;
  double zeta;
  double xi;
  double alpha0;
  double i_sat3;
  double i_sat2;
  double i_coh;
  double length_for_t0;
} eitb_design_report;

/* preset: "nv" or "rb"; arrangement: "uniform" or "copropagating". */
eitb_status eitb_design(const char* preset, double t0, const char* arrangement,
                        eitb_design_report* out);
/* Human-readable report with per-field provenance; returns the number of
 * bytes that would be written (excluding NUL), snprintf-style. */
eitb_status eitb_design_text(const char* preset, double t0, const char* arrangement, char* buf,
                             size_t buf_size, size_t* needed);

/* ------------------------------------------------------------------ */
/* Scenario runner (spectrum / bleach_curve / propagate / transmittance /
 * mb_filter / design configs in JSON).                                */

typedef struct eitb_run_result eitb_run_result; /* opaque */

/* out_dir, format, params_patch may be NULL (config values apply); seed may
 * be NULL. params_patch is a JSON object merged key-by-key into
 * config["params"] before execution. */
eitb_status eitb_run_scenario_file(const char* config_path, const char* out_dir,
                                   const uint64_t* seed, const char* format,
                                   const char* params_patch, eitb_run_result** out);
eitb_status eitb_run_scenario_json(const char* config_text, const char* out_dir,
                                   const uint64_t* seed, const char* format,
                                   const char* params_patch, eitb_run_result** out);
void eitb_run_result_destroy(eitb_run_result* result);
/* 0 = success, 2 = schema violation, 3 = solver failure. */
int eitb_run_result_exit_code(const eitb_run_result* result);
const char* eitb_run_result_error_json(const eitb_run_result* result);
const char* eitb_run_result_summary(const eitb_run_result* result);
size_t eitb_run_result_file_count(const eitb_run_result* result);
const char* eitb_run_result_file(const eitb_run_result* result, size_t index);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EITBLEACH_H */
