#pragma once

#include <vector>

#include "types.hpp"

// Optically-thick propagation: adaptive Beer-Lambert integration for the
// uniform-pump and copropagating-pump arrangements, plus the implicit
// transfer and transmittance laws.
//
// Two variants of the implicit laws are provided. TransferLaw::exact is
// what separating dI/dz = -alpha(I) I actually yields; TransferLaw::compact
// is a shorter reference form that drops the (1 + Ip/Icoh) factor on the
// logarithm and the 1/2 on the quadratic term. Direct ODE integration is
// the ground truth; the exact law matches it to solver tolerance, the
// compact form only in its small-(Ip/Icoh, I0^2/(Ip Icoh)) regime.
namespace eitb::prop {

enum class Arrangement { uniform_pump, copropagating };

struct PropagationConfig {
  double length_l = 0.0;  // medium length [m]
  double i0 = 0.0;        // input signal intensity [W/m^2]
  double ip0 = 0.0;       // input pump intensity [W/m^2]
  Arrangement arrangement = Arrangement::uniform_pump;
  double rel_tol = 1e-9;
  double abs_tol = 0.0;  // 0: scaled from the inputs

  void validate() const;
};

struct ProfileSample {
  double z = 0.0;
  double intensity = 0.0;
  double pump_intensity = 0.0;
  double alpha_s = 0.0;
  double alpha_p = 0.0;
};

struct PropagationProfile {
  std::vector<ProfileSample> samples;
  double transmittance = 0.0;  // I(l)/I0
  double t0 = 0.0;             // small-signal transmission exp(-alpha0 l)
};

PropagationProfile integrate_uniform(const PropagationConfig& config,
                                     const IntensityScales& scales, double alpha0);

// Coupled signal/pump integration under the equal-group-velocity assumption.
PropagationProfile integrate_copropagating(const PropagationConfig& config,
                                           const IntensityScales& scales, double alpha0);

enum class TransferLaw { compact, exact };

// LHS - RHS of the depth <-> intensity transfer law at depth z for the
// candidate intensity; zero at the true I(z). Root-solvable by bisection on
// (0, i0].
double transfer_residual(double z, double i_candidate, double i0, double i_pump,
                         const IntensityScales& scales, double alpha0, TransferLaw law);

// Root of the transfer law: I(z) for the uniform-pump arrangement.
double transfer_root(double z, double i0, double i_pump, const IntensityScales& scales,
                     double alpha0, TransferLaw law);

// Overall transmittance T of a medium with small-signal transmission t0 from
// the implicit transmittance law (bisection to 1e-10 on [t0*(1-1e-12), 1]).
// The compact variant drops the (1 + Ip/Icoh) log factor and the
// quadratic 1/2.
double transmittance_implicit(double t0, double i0, double i_pump, const IntensityScales& scales,
                              TransferLaw law);

// Two-state reference: root of ln(I0/I) + (I0 - I)/i_sat2 = alpha0 l.
double transmittance_two_state(double t0, double i0, double i_sat2);

enum class DecayRegime { exponential, linear, sqrt_law, transition };

// Deterministic classification of the initial decay shape for input
// intensity i; "transition" within a factor 3 of a regime boundary.
DecayRegime classify_decay_regime(double i, const IntensityScales& scales);

}  // namespace eitb::prop
