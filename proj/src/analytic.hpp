#pragma once

#include <utility>

#include "types.hpp"

// Closed-form optical response of the two- and three-state absorbers at
// single- and two-photon resonance, with limit reductions, peak positions,
// bandwidths, group velocities and penetration-depth estimates.
//
// Approximate expressions carry their validity regime as an explicit
// precondition and refuse outside it instead of extrapolating.
namespace eitb::analytic {

// Margin used by regime preconditions: a quantity is "well inside" a regime
// when it clears the boundary by at least this factor.
inline constexpr double kRegimeMargin = 3.0;

// Two-state absorption at resonance, alpha2 = (2 xi / G) / (1 + 8 Os^2/G^2).
double alpha_two_state(const AtomParams& atom, const DriveParams& drive, double xi);

// Exact three-state absorption of the signal at Delta = delta = 0 in rate
// form. gamma_deph = 0 returns exactly 0 (divergent coherence term);
// omega_p = 0 is a domain error (use the two-state model instead).
double alpha_signal(const AtomParams& atom, const DriveParams& drive, double xi);

// Same quantity in intensity form (equal dipole moments):
// alpha0 / (1 + I(1/Ip + 1/Isat + 2/Icoh) + Ip/Icoh + I^2/(Ip Icoh)).
// i_pump = 0 returns 0 for any signal intensity: with no pump the signal
// optically pumps the population into the far ground state.
double alpha_signal_intensity(double intensity, double i_pump, const IntensityScales& scales,
                              double alpha0);

// Pump absorption; the intensity form of alpha_signal with I and Ip swapped.
double alpha_pump(const AtomParams& atom, const DriveParams& drive, double xi);
double alpha_pump_intensity(double intensity, double i_pump, const IntensityScales& scales,
                            double alpha0);

// Equal-field reference model, alpha0 / (1 + 3 I/Isat + I/Icoh). Kept as a
// standalone formula: substituting Ip = I into alpha_signal_intensity gives
// a different denominator (2 + I/Isat + 4 I/Icoh), and both variants are
// exposed rather than reconciled.
double alpha_equal_fields(double intensity, const IntensityScales& scales, double alpha0);

// Autler-Townes peak positions of the signal absorption spectrum.
struct PeakAnalysis {
  double delta_plus = 0.0;
  double delta_minus = 0.0;
  double aux_a = 0.0;   // A = sqrt(gamma G' + Op^2 + Os^2)
  bool merged = false;  // radicand negative: single peak at zero detuning
};
PeakAnalysis peak_positions(const AtomParams& atom, const DriveParams& drive);

enum class BandwidthRegime { three_state_small_gamma, two_state, dephasing_dominated };

// Usable signal bandwidth. The small-gamma expansion is refused when
// gamma_deph > min(G, Op, Os); the two-state FWHM is G sqrt(1 + 8 Os^2/G^2);
// the dephasing-dominated single-peak FWHM is G'.
double bandwidth(const AtomParams& atom, const DriveParams& drive, BandwidthRegime regime);

// Intensity beyond which absorption scales as 1/I^2. i_q13 is the full
// threshold (Ip Icoh + Isat Icoh + 2 Ip Isat)/Isat; i_simple is the onset
// Icoh + 2 Ip quoted for the strongly saturable case.
struct QuadraticThreshold {
  double i_q13 = 0.0;
  double i_simple = 0.0;
};
QuadraticThreshold quadratic_threshold(const IntensityScales& scales);

struct GroupVelocityResult {
  double v_g = 0.0;             // [m/s]
  double dchi_ddetuning = 0.0;  // d Re[chi]/d detuning at the operating point [s]
};

// Group velocities at Delta = delta = 0 from the dispersion slope of the
// steady-state susceptibility. The signal slope changes sign with the
// operating regime (normal dispersion inside a broad dephasing-dominated
// line, anomalous in detuning inside the transparency window), so v_g is
// only guaranteed positive where dchi_ddetuning >= 0.
GroupVelocityResult group_velocity_signal(const AtomParams& atom, const DriveParams& drive,
                                          const MediumParams& medium);
GroupVelocityResult group_velocity_pump(const AtomParams& atom, const DriveParams& drive,
                                        const MediumParams& medium);

// Decoherence-dominated limit, v_g = c / (n + 2 N d^2 w_s/(hbar eps0 eps_r G'^2)).
// Requires I, Ip <= min(Isat, Icoh)/kRegimeMargin.
double group_velocity_signal_decoherence_limit(const AtomParams& atom, const DriveParams& drive,
                                               const MediumParams& medium);

// Small-dephasing limit, v_g = c / (n + (2 N d^2 w_s/(hbar eps0 eps_r Os^2))
// / (2 + Ip/I + I/Ip)). Requires gamma_deph <= min(G, Op, Os)/kRegimeMargin.
double group_velocity_signal_small_dephasing(const AtomParams& atom, const DriveParams& drive,
                                             const MediumParams& medium);

enum class PenetrationRegime { linear, pump_bleached, coherent, saturated, quadratic };

// Characteristic penetration depth of the input field in each bleaching
// regime; refuses when i0 is not inside the requested regime.
double penetration_depth(PenetrationRegime regime, const IntensityScales& scales, double i0,
                         double alpha0);

// Normalized dark-state amplitudes (c_a, c_c) with |D> = c_a|a> + c_c|c>.
std::pair<double, double> dark_state(const DriveParams& drive);

}  // namespace eitb::analytic
