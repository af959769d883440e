#include "analytic.hpp"

#include <algorithm>
#include <cmath>

#include "constants.hpp"
#include "core_model.hpp"

namespace eitb::analytic {

namespace {

// num/den with an exact zero short-circuit so that 0/0 corners inherit the
// zero-numerator limit instead of NaN.
double ratio0(double num, double den) { return num == 0.0 ? 0.0 : num / den; }

double sq(double x) { return x * x; }

}  // namespace

double alpha_two_state(const AtomParams& atom, const DriveParams& drive, double xi) {
  atom.validate();
  drive.validate();
  if (!(atom.gamma_sp > 0.0)) throw DomainError("alpha_two_state: gamma_sp must be > 0");
  const double g = atom.gamma_sp;
  return (2.0 * xi / g) / (1.0 + 8.0 * sq(drive.omega_s) / sq(g));
}

double alpha_signal(const AtomParams& atom, const DriveParams& drive, double xi) {
  atom.validate();
  drive.validate();
  if (!(drive.omega_p > 0.0))
    throw DomainError("alpha_signal: omega_p must be > 0; use the two-state model instead");
  const double gt = atom.gamma_total();
  if (!(gt > 0.0)) throw DomainError("alpha_signal: gamma_total must be > 0");
  const double os2 = sq(drive.omega_s);
  const double op2 = sq(drive.omega_p);
  const double denom = 1.0 + os2 / op2 + ratio0(12.0 * os2, atom.gamma_sp * gt) +
                       ratio0(sq(op2 + os2), op2 * atom.gamma_deph * gt);
  return ratio0(2.0 * xi / gt, denom);
}

double alpha_signal_intensity(double intensity, double i_pump, const IntensityScales& scales,
                              double alpha0) {
  if (!(intensity >= 0.0)) throw DomainError("alpha_signal_intensity: intensity must be >= 0");
  if (!(i_pump >= 0.0)) throw DomainError("alpha_signal_intensity: i_pump must be >= 0");
  if (i_pump == 0.0) return 0.0;
  const double denom = 1.0 + intensity / i_pump + ratio0(intensity, scales.i_sat3) +
                       ratio0(2.0 * intensity, scales.i_coh) + ratio0(i_pump, scales.i_coh) +
                       ratio0(sq(intensity), i_pump * scales.i_coh);
  return ratio0(alpha0, denom);
}

double alpha_pump(const AtomParams& atom, const DriveParams& drive, double xi) {
  if (!(drive.omega_s > 0.0))
    throw DomainError("alpha_pump: omega_s must be > 0 (mirror of alpha_signal)");
  DriveParams swapped = drive;
  std::swap(swapped.omega_s, swapped.omega_p);
  return alpha_signal(atom, swapped, xi);
}

double alpha_pump_intensity(double intensity, double i_pump, const IntensityScales& scales,
                            double alpha0) {
  return alpha_signal_intensity(i_pump, intensity, scales, alpha0);
}

double alpha_equal_fields(double intensity, const IntensityScales& scales, double alpha0) {
  if (!(intensity >= 0.0)) throw DomainError("alpha_equal_fields: intensity must be >= 0");
  return alpha0 /
         (1.0 + ratio0(3.0 * intensity, scales.i_sat3) + ratio0(intensity, scales.i_coh));
}

PeakAnalysis peak_positions(const AtomParams& atom, const DriveParams& drive) {
  atom.validate();
  drive.validate();
  if (!(drive.omega_p > 0.0)) throw DomainError("peak_positions: omega_p must be > 0");
  const double gt = atom.gamma_total();
  if (!(gt > 0.0)) throw DomainError("peak_positions: gamma_total must be > 0");
  const double g = atom.gamma_sp;
  const double gd = atom.gamma_deph;
  const double os2 = sq(drive.omega_s);
  const double op2 = sq(drive.omega_p);

  PeakAnalysis out;
  out.aux_a = std::sqrt(gd * gt + op2 + os2);
  const double radicand =
      out.aux_a * (drive.omega_p * (5.0 * gd + 2.0 * g) / gt + os2 / drive.omega_p) -
      4.0 * gd * sq(out.aux_a) / gt;
  out.merged = radicand < 0.0;
  if (!out.merged) {
    out.delta_plus = std::sqrt(radicand);
    out.delta_minus = -out.delta_plus;
  }
  return out;
}

double bandwidth(const AtomParams& atom, const DriveParams& drive, BandwidthRegime regime) {
  atom.validate();
  drive.validate();
  switch (regime) {
    case BandwidthRegime::two_state: {
      if (!(atom.gamma_sp > 0.0)) throw DomainError("bandwidth: gamma_sp must be > 0");
      return atom.gamma_sp * std::sqrt(1.0 + 8.0 * sq(drive.omega_s) / sq(atom.gamma_sp));
    }
    case BandwidthRegime::dephasing_dominated: {
      if (!peak_positions(atom, drive).merged)
        throw DomainError(
            "bandwidth: dephasing_dominated requires a merged (single-peak) spectrum");
      return atom.gamma_total();
    }
    case BandwidthRegime::three_state_small_gamma:
    default: {
      const double g = atom.gamma_sp;
      const double gd = atom.gamma_deph;
      if (!(g > 0.0) || !(drive.omega_p > 0.0) || !(drive.omega_s > 0.0))
        throw DomainError("bandwidth: small-gamma form needs gamma_sp, omega_p, omega_s > 0");
      if (gd > std::min({g, drive.omega_p, drive.omega_s}))
        throw DomainError(
            "bandwidth: small-gamma expansion is valid only for gamma_deph <= min(gamma_sp, "
            "omega_p, omega_s)");
      const double os2 = sq(drive.omega_s);
      const double op2 = sq(drive.omega_p);
      const double peak0 = std::pow(op2 + os2, 0.75) / std::sqrt(drive.omega_p);
      const double corr =
          gd * (sq(g) + 2.0 * drive.omega_p * (drive.omega_p - std::sqrt(op2 + os2))) /
          (2.0 * g * (op2 + os2));
      return peak0 * (1.0 + corr);
    }
  }
}

QuadraticThreshold quadratic_threshold(const IntensityScales& scales) {
  if (!(scales.i_sat3 > 0.0)) throw DomainError("quadratic_threshold: i_sat3 must be > 0");
  QuadraticThreshold t;
  t.i_q13 = (scales.i_pump * scales.i_coh + scales.i_sat3 * scales.i_coh +
             2.0 * scales.i_pump * scales.i_sat3) /
            scales.i_sat3;
  t.i_simple = scales.i_coh + 2.0 * scales.i_pump;
  return t;
}

namespace {

// Shared setup for the dispersion slopes. The susceptibility prefactor
// 2 N d^2/(hbar eps0 eps_r) equals xi n c / omega_s.
struct DispersionContext {
  double prefac;  // xi n c / omega_s
  double a2;      // gamma G' + Op^2 + Os^2
  double g, gd, gt, os2, op2;
};

DispersionContext dispersion_context(const AtomParams& atom, const DriveParams& drive,
                                     const MediumParams& medium) {
  atom.validate();
  drive.validate();
  medium.validate();
  if (!(atom.gamma_sp > 0.0)) throw DomainError("group velocity: gamma_sp must be > 0");
  if (!(drive.omega_p > 0.0)) throw DomainError("group velocity: omega_p must be > 0");
  DispersionContext c;
  c.g = atom.gamma_sp;
  c.gd = atom.gamma_deph;
  c.gt = atom.gamma_total();
  c.os2 = sq(drive.omega_s);
  c.op2 = sq(drive.omega_p);
  c.a2 = c.gd * c.gt + c.op2 + c.os2;
  c.prefac = model::compute_xi(medium) * medium.bulk_index * kSpeedOfLight /
             medium.omega_trans_s;
  return c;
}

}  // namespace

GroupVelocityResult group_velocity_signal(const AtomParams& atom, const DriveParams& drive,
                                          const MediumParams& medium) {
  const DispersionContext c = dispersion_context(atom, drive, medium);
  // (alpha_s/alpha0) * bracket with numerator and denominator both scaled by
  // gamma G', which keeps the gamma -> 0 limit finite.
  const double num = 4.0 * c.gd * (c.gd * c.gt + c.os2) / c.gt - (c.op2 + c.os2);
  const double den = c.gd * c.gt * (1.0 + c.os2 / c.op2) + 12.0 * c.gd * c.os2 / c.g +
                     sq(c.op2 + c.os2) / c.op2;
  GroupVelocityResult r;
  r.dchi_ddetuning = c.prefac * num / (den * c.a2);
  r.v_g = kSpeedOfLight /
          (medium.bulk_index + 0.5 * medium.omega_trans_s * r.dchi_ddetuning);
  return r;
}

GroupVelocityResult group_velocity_pump(const AtomParams& atom, const DriveParams& drive,
                                        const MediumParams& medium) {
  if (!(drive.omega_s > 0.0)) throw DomainError("group_velocity_pump: omega_s must be > 0");
  const DispersionContext c = dispersion_context(atom, drive, medium);
  const double num = 4.0 * c.gd * (c.gd * c.gt + 2.0 * c.op2) / c.gt;
  const double den = c.gd * c.gt * (1.0 + c.op2 / c.os2) + 12.0 * c.gd * c.op2 / c.g +
                     sq(c.op2 + c.os2) / c.os2;
  GroupVelocityResult r;
  r.dchi_ddetuning = c.prefac * num / (den * c.a2);
  r.v_g = kSpeedOfLight /
          (medium.bulk_index + 0.5 * medium.omega_trans_p * r.dchi_ddetuning);
  return r;
}

double group_velocity_signal_decoherence_limit(const AtomParams& atom, const DriveParams& drive,
                                               const MediumParams& medium) {
  atom.validate();
  medium.validate();
  const IntensityScales s = model::compute_intensity_scales(atom, drive, medium);
  const double i_sig = model::rabi_to_intensity(drive.omega_s, s.zeta);
  const double bound = std::min(s.i_sat3, s.i_coh) / kRegimeMargin;
  if (i_sig > bound || s.i_pump > bound)
    throw DomainError(
        "group_velocity_signal_decoherence_limit: requires I, I_p well below I_sat and I_coh");
  const double term =
      model::compute_xi(medium) * medium.bulk_index * kSpeedOfLight / sq(atom.gamma_total());
  return kSpeedOfLight / (medium.bulk_index + term);
}

double group_velocity_signal_small_dephasing(const AtomParams& atom, const DriveParams& drive,
                                             const MediumParams& medium) {
  atom.validate();
  drive.validate();
  medium.validate();
  if (!(drive.omega_s > 0.0) || !(drive.omega_p > 0.0))
    throw DomainError("group_velocity_signal_small_dephasing: both drives must be > 0");
  if (atom.gamma_deph > std::min({atom.gamma_sp, drive.omega_p, drive.omega_s}) / kRegimeMargin)
    throw DomainError(
        "group_velocity_signal_small_dephasing: requires gamma_deph well below gamma_sp, "
        "omega_p, omega_s");
  const double ratio = sq(drive.omega_p) / sq(drive.omega_s);
  const double term = model::compute_xi(medium) * medium.bulk_index * kSpeedOfLight /
                      sq(drive.omega_s) / (2.0 + ratio + 1.0 / ratio);
  return kSpeedOfLight / (medium.bulk_index + term);
}

double penetration_depth(PenetrationRegime regime, const IntensityScales& scales, double i0,
                         double alpha0) {
  if (!(alpha0 > 0.0)) throw DomainError("penetration_depth: alpha0 must be > 0");
  if (!(i0 >= 0.0)) throw DomainError("penetration_depth: i0 must be >= 0");
  const double m = kRegimeMargin;
  switch (regime) {
    case PenetrationRegime::linear:
      if (i0 * m > std::min({scales.i_pump, scales.i_sat3, scales.i_coh}))
        throw DomainError("penetration_depth: linear regime needs i0 well below all scales");
      return 1.0 / alpha0;
    case PenetrationRegime::pump_bleached: {
      const double cap =
          std::min({scales.i_sat3, scales.i_coh, std::sqrt(scales.i_pump * scales.i_coh)});
      if (i0 < m * scales.i_pump || i0 * m > cap)
        throw DomainError("penetration_depth: pump-bleached regime needs I_p << i0 << other scales");
      return i0 / (alpha0 * scales.i_pump);
    }
    case PenetrationRegime::coherent:
      if (i0 < m * scales.i_coh)
        throw DomainError("penetration_depth: coherent regime needs i0 >> I_coh");
      return i0 / (alpha0 * scales.i_coh);
    case PenetrationRegime::saturated:
      if (i0 < m * scales.i_sat3)
        throw DomainError("penetration_depth: saturated regime needs i0 >> I_sat");
      return i0 / (alpha0 * scales.i_sat3);
    case PenetrationRegime::quadratic:
    default: {
      if (i0 < quadratic_threshold(scales).i_q13)
        throw DomainError("penetration_depth: quadratic regime needs i0 above the threshold");
      return sq(i0) / (alpha0 * scales.i_pump * scales.i_coh);
    }
  }
}

std::pair<double, double> dark_state(const DriveParams& drive) {
  drive.validate();
  const double norm2 = sq(drive.omega_s) + sq(drive.omega_p);
  if (!(norm2 > 0.0)) throw DomainError("dark_state: both drives are zero");
  const double inv = 1.0 / std::sqrt(norm2);
  return {drive.omega_p * inv, -drive.omega_s * inv};
}

}  // namespace eitb::analytic
