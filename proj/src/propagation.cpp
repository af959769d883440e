#include "propagation.hpp"

#include <algorithm>
#include <cmath>

#include "analytic.hpp"
#include "num/ode.hpp"
#include "num/roots.hpp"

namespace eitb::prop {

namespace {

PropagationProfile profile_from_samples(const std::vector<num::OdeSample>& sol, bool coupled,
                                        double ip_const, const IntensityScales& scales,
                                        double alpha0, double i0, double length) {
  PropagationProfile out;
  out.samples.reserve(sol.size());
  for (const auto& s : sol) {
    ProfileSample p;
    p.z = s.x;
    p.intensity = std::max(s.y[0], 0.0);
    p.pump_intensity = coupled ? std::max(s.y[1], 0.0) : ip_const;
    p.alpha_s = analytic::alpha_signal_intensity(p.intensity, p.pump_intensity, scales, alpha0);
    p.alpha_p = analytic::alpha_pump_intensity(p.intensity, p.pump_intensity, scales, alpha0);
    out.samples.push_back(p);
  }
  out.t0 = std::exp(-alpha0 * length);
  out.transmittance = i0 > 0.0 ? out.samples.back().intensity / i0 : 0.0;
  return out;
}

}  // namespace

void PropagationConfig::validate() const {
  if (!(length_l > 0.0)) throw DomainError("PropagationConfig: length_l must be > 0");
  if (!(i0 >= 0.0)) throw DomainError("PropagationConfig: i0 must be >= 0");
  if (!(ip0 >= 0.0)) throw DomainError("PropagationConfig: ip0 must be >= 0");
  if (!(rel_tol > 0.0)) throw DomainError("PropagationConfig: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw DomainError("PropagationConfig: abs_tol must be >= 0");
  if (arrangement == Arrangement::copropagating && !(ip0 > 0.0))
    throw DomainError("PropagationConfig: copropagating arrangement needs ip0 > 0");
}

PropagationProfile integrate_uniform(const PropagationConfig& config,
                                     const IntensityScales& scales, double alpha0) {
  config.validate();
  if (config.arrangement != Arrangement::uniform_pump)
    throw DomainError("integrate_uniform: arrangement must be uniform_pump");

  const double ip = config.ip0;
  num::OdeRhs rhs = [&](double, const std::vector<double>& y, std::vector<double>& dydx) {
    const double i = std::max(y[0], 0.0);
    dydx[0] = -analytic::alpha_signal_intensity(i, ip, scales, alpha0) * i;
  };
  num::OdeOptions opt;
  opt.rel_tol = config.rel_tol;
  opt.abs_tol = config.abs_tol > 0.0
                    ? config.abs_tol
                    : 1e-3 * config.rel_tol * std::max(config.i0, config.ip0);
  auto sol = num::integrate(rhs, {config.i0}, 0.0, config.length_l, opt);
  return profile_from_samples(sol, false, ip, scales, alpha0, config.i0, config.length_l);
}

PropagationProfile integrate_copropagating(const PropagationConfig& config,
                                           const IntensityScales& scales, double alpha0) {
  config.validate();
  if (config.arrangement != Arrangement::copropagating)
    throw DomainError("integrate_copropagating: arrangement must be copropagating");

  num::OdeRhs rhs = [&](double, const std::vector<double>& y, std::vector<double>& dydx) {
    const double i = std::max(y[0], 0.0);
    const double ip = std::max(y[1], 0.0);
    dydx[0] = -analytic::alpha_signal_intensity(i, ip, scales, alpha0) * i;
    dydx[1] = -analytic::alpha_pump_intensity(i, ip, scales, alpha0) * ip;
  };
  num::OdeOptions opt;
  opt.rel_tol = config.rel_tol;
  opt.abs_tol = config.abs_tol > 0.0
                    ? config.abs_tol
                    : 1e-3 * config.rel_tol * std::max(config.i0, config.ip0);
  auto sol = num::integrate(rhs, {config.i0, config.ip0}, 0.0, config.length_l, opt);
  return profile_from_samples(sol, true, 0.0, scales, alpha0, config.i0, config.length_l);
}

double transfer_residual(double z, double i_candidate, double i0, double i_pump,
                         const IntensityScales& scales, double alpha0, TransferLaw law) {
  if (!(i_candidate > 0.0) || !(i_candidate <= i0))
    throw DomainError("transfer_residual: need 0 < i_candidate <= i0");
  const double log_term = std::log(i0 / i_candidate);
  const double lin = (i0 - i_candidate) * (1.0 / i_pump + 1.0 / scales.i_sat3 + 2.0 / scales.i_coh);
  const double quad = (i0 * i0 - i_candidate * i_candidate) / (i_pump * scales.i_coh);
  if (law == TransferLaw::compact) return alpha0 * z - ((1.0 + i_pump / scales.i_coh) * log_term + lin + quad);
  return alpha0 * z - ((1.0 + i_pump / scales.i_coh) * log_term + lin + 0.5 * quad);
}

double transfer_root(double z, double i0, double i_pump, const IntensityScales& scales,
                     double alpha0, TransferLaw law) {
  if (!(i0 > 0.0)) throw DomainError("transfer_root: i0 must be > 0");
  if (z == 0.0) return i0;
  auto f = [&](double i) { return transfer_residual(z, i, i0, i_pump, scales, alpha0, law); };
  // Walk the lower bracket edge down until the residual changes sign.
  double lo = i0;
  double hi = i0;
  while (f(lo) > 0.0) {
    hi = lo;
    lo *= 0.5;
    if (lo < i0 * 1e-300) return 0.0;  // fully absorbed at this depth
  }
  return num::bisect(f, lo, hi, i0 * 1e-14);
}

double transmittance_implicit(double t0, double i0, double i_pump, const IntensityScales& scales,
                              TransferLaw law) {
  if (!(t0 > 0.0 && t0 < 1.0)) throw DomainError("transmittance_implicit: t0 must be in (0, 1)");
  if (!(i0 >= 0.0)) throw DomainError("transmittance_implicit: i0 must be >= 0");
  if (!(i_pump > 0.0)) throw DomainError("transmittance_implicit: i_pump must be > 0");

  const double alpha0_l = -std::log(t0);
  auto f = [&](double t) {
    if (law == TransferLaw::compact) {
      const double lin =
          i0 * (1.0 - t) * (1.0 / i_pump + 1.0 / scales.i_sat3 + 2.0 / scales.i_coh);
      const double quad = (1.0 - t * t) * i0 * i0 / (i_pump * scales.i_coh);
      return std::log(t0 / t) + lin + quad;
    }
    const double lin = i0 * (1.0 - t) * (1.0 / i_pump + 1.0 / scales.i_sat3 + 2.0 / scales.i_coh);
    const double quad = 0.5 * (1.0 - t * t) * i0 * i0 / (i_pump * scales.i_coh);
    return (1.0 + i_pump / scales.i_coh) * std::log(1.0 / t) + lin + quad - alpha0_l;
  };

  const double lo = t0 * (1.0 - 1e-12);
  if (i0 == 0.0 && law == TransferLaw::compact) return t0;
  const double f_lo = f(lo);
  const double f_hi = f(1.0);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0 || std::signbit(f_lo) == std::signbit(f_hi)) return 1.0;  // fully bleached
  return num::bisect(f, lo, 1.0, 1e-10);
}

double transmittance_two_state(double t0, double i0, double i_sat2) {
  if (!(t0 > 0.0 && t0 < 1.0)) throw DomainError("transmittance_two_state: t0 must be in (0, 1)");
  if (!(i_sat2 > 0.0)) throw DomainError("transmittance_two_state: i_sat2 must be > 0");
  if (i0 == 0.0) return t0;
  const double alpha0_l = -std::log(t0);
  auto f = [&](double t) { return std::log(1.0 / t) + i0 * (1.0 - t) / i_sat2 - alpha0_l; };
  const double lo = t0 * (1.0 - 1e-12);
  if (std::signbit(f(lo)) == std::signbit(f(1.0))) return 1.0;
  return num::bisect(f, lo, 1.0, 1e-10);
}

DecayRegime classify_decay_regime(double i, const IntensityScales& scales) {
  if (!(i >= 0.0)) throw DomainError("classify_decay_regime: intensity must be >= 0");
  const double i_bar = std::min({scales.i_pump, scales.i_sat3, scales.i_coh});
  const double i_quad = analytic::quadratic_threshold(scales).i_q13;
  const double m = analytic::kRegimeMargin;
  if (i >= m * i_quad) return DecayRegime::sqrt_law;
  if (i * m <= i_bar) return DecayRegime::exponential;
  if (i >= m * i_bar && i * m <= i_quad) return DecayRegime::linear;
  return DecayRegime::transition;
}

}  // namespace eitb::prop
