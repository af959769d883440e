#pragma once

#include <map>
#include <string>

#include "types.hpp"

// Material presets for the two reference implementations: NV centres in a
// diamond waveguide and warm Rb vapour on the D1 line. Every stored number
// carries a provenance note retrievable alongside the value.
namespace eitb::presets {

struct MaterialPreset {
  std::string name;
  AtomParams atom;
  MediumParams medium;
  // Literature characteristic constant to use instead of the value
  // computed from (density, dipole); 0 means "compute from the medium
  // fields".
  double xi_pinned = 0.0;
  std::map<std::string, std::string> provenance;

  double xi() const;  // pinned value when present, computed otherwise
};

MaterialPreset nv_diamond();
MaterialPreset rb_vapour();

// Lookup by CLI name ("nv", "rb"); throws DomainError for unknown names.
MaterialPreset by_name(const std::string& name);

struct DesignReport {
  MaterialPreset preset;
  double target_t0 = 0.0;
  double zeta = 0.0;
  double xi = 0.0;
  double alpha0 = 0.0;
  double i_sat3 = 0.0;
  double i_sat2 = 0.0;
  double i_coh = 0.0;
  double length_for_t0 = 0.0;  // -ln(t0)/alpha0
  std::string arrangement;
};

DesignReport design_report(const MaterialPreset& preset, double target_t0,
                           const std::string& arrangement);

}  // namespace eitb::presets
