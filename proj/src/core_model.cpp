#include "core_model.hpp"

#include <cmath>

#include "constants.hpp"

namespace eitb::model {

double compute_zeta(const MediumParams& medium) {
  if (!(medium.dipole_ab > 0.0)) throw DomainError("compute_zeta: dipole_ab must be > 0");
  if (!(medium.eps_r > 0.0)) throw DomainError("compute_zeta: eps_r must be > 0");
  return kHbar * kHbar * kSpeedOfLight * kEps0 * medium.eps_r /
         (2.0 * medium.dipole_ab * medium.dipole_ab);
}

double compute_xi(const MediumParams& medium) {
  if (medium.density == 0.0) return 0.0;
  medium.validate();
  return 2.0 * medium.density * medium.dipole_ab * medium.dipole_ab * medium.omega_trans_s /
         (kHbar * medium.eps_r * kEps0 * medium.bulk_index * kSpeedOfLight);
}

double dipole_from_decay(double gamma_sp, double omega_trans, double eps_r, double eta) {
  if (!(gamma_sp > 0.0) || !(omega_trans > 0.0) || !(eps_r > 0.0) || !(eta > 0.0))
    throw DomainError("dipole_from_decay: all inputs must be > 0");
  const double c3 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight;
  const double w3 = omega_trans * omega_trans * omega_trans;
  return std::sqrt(3.0 * kPi * kHbar * kEps0 * eps_r * c3 * gamma_sp / (w3 * eta));
}

double small_signal_alpha(double xi, const AtomParams& atom) {
  const double gt = atom.gamma_total();
  if (!(gt > 0.0)) throw DomainError("small_signal_alpha: gamma_total must be > 0");
  return 2.0 * xi / gt;
}

IntensityScales compute_intensity_scales(const AtomParams& atom, const DriveParams& drive,
                                         const MediumParams& medium) {
  atom.validate();
  drive.validate();
  const double zeta = compute_zeta(medium);
  const double gt = atom.gamma_total();
  IntensityScales s;
  s.zeta = zeta;
  s.i_sat3 = zeta * atom.gamma_sp * gt / 12.0;
  s.i_sat2 = zeta * atom.gamma_sp * atom.gamma_sp / 8.0;
  s.i_coh = zeta * atom.gamma_deph * gt;
  s.i_pump = rabi_to_intensity(drive.omega_p, zeta);
  return s;
}

double intensity_to_rabi(double intensity, double zeta) {
  if (!(zeta > 0.0)) throw DomainError("intensity_to_rabi: zeta must be > 0");
  if (!(intensity >= 0.0)) throw DomainError("intensity_to_rabi: intensity must be >= 0");
  return std::sqrt(intensity / zeta);
}

}  // namespace eitb::model
