#pragma once

#include "types.hpp"

// Physical parameter bookkeeping: Rabi/intensity conversions and the two
// medium constants (zeta, xi) every absorption formula is built from.
namespace eitb::model {

// zeta = hbar^2 c eps0 eps_r / (2 d_ab^2), the intensity of a field whose
// Rabi frequency is 1 rad/s. Throws DomainError for a non-positive dipole.
double compute_zeta(const MediumParams& medium);

// xi = 2 N d_ab^2 omega_s / (hbar eps_r eps0 n c). Prefactor of every
// absorption coefficient; zero density gives xi = 0 (transparent medium).
double compute_xi(const MediumParams& medium);

// Dipole moment from the radiative rate: d^2 = 3 pi hbar eps0 eps_r c^3 G /
// (omega^3 eta) for a transition at omega in a host of index eta.
double dipole_from_decay(double gamma_sp, double omega_trans, double eps_r, double eta);

// Small-signal (linear) absorption coefficient alpha0 = 2 xi / gamma_total.
double small_signal_alpha(double xi, const AtomParams& atom);

IntensityScales compute_intensity_scales(const AtomParams& atom, const DriveParams& drive,
                                         const MediumParams& medium);

inline double rabi_to_intensity(double omega, double zeta) { return zeta * omega * omega; }
double intensity_to_rabi(double intensity, double zeta);

}  // namespace eitb::model
