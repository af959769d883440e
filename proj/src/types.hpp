#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace eitb {

// Thrown when an input lies outside a formula's stated validity range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when the Liouvillian kernel is not one-dimensional.
class DegenerateSteadyState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an iterative solver fails; carries the residual history.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> trace)
      : std::runtime_error(what), residual_trace(std::move(trace)) {}
  std::vector<double> residual_trace;
};

// Configuration file violates the scenario schema.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_name(field) {}
  std::string field_name;
};

// Decay and dephasing rates of one lambda atom [rad/s].
struct AtomParams {
  double gamma_sp = 0.0;    // spontaneous emission rate per decay channel
  double gamma_deph = 0.0;  // ground-state dephasing rate

  // Total decoherence rate of the optical coherence.
  double gamma_total() const { return gamma_deph + 2.0 * gamma_sp; }

  void validate() const {
    if (!(gamma_sp >= 0.0)) throw DomainError("AtomParams: gamma_sp must be >= 0");
    if (!(gamma_deph >= 0.0)) throw DomainError("AtomParams: gamma_deph must be >= 0");
  }
};

// Rabi frequencies and detunings [rad/s]. Rabi amplitudes are real and
// non-negative; field phases are dropped.
struct DriveParams {
  double omega_s = 0.0;    // signal Rabi frequency
  double omega_p = 0.0;    // pump Rabi frequency
  double delta_one = 0.0;  // one-photon detuning
  double delta_two = 0.0;  // two-photon detuning

  void validate() const {
    if (!(omega_s >= 0.0)) throw DomainError("DriveParams: omega_s must be >= 0");
    if (!(omega_p >= 0.0)) throw DomainError("DriveParams: omega_p must be >= 0");
  }
};

// Ensemble and host-material quantities.
struct MediumParams {
  double density = 0.0;        // atomic number density [1/m^3]
  double dipole_ab = 0.0;      // transition dipole moment a-b [C m]
  double dipole_bc = 0.0;      // transition dipole moment b-c [C m]
  double eps_r = 1.0;          // relative permittivity
  double bulk_index = 1.0;     // bulk refractive index
  double omega_trans_s = 0.0;  // optical angular frequency, signal [rad/s]
  double omega_trans_p = 0.0;  // optical angular frequency, pump [rad/s]

  bool equal_dipoles() const { return dipole_ab == dipole_bc; }

  void validate() const {
    if (!(density >= 0.0)) throw DomainError("MediumParams: density must be >= 0");
    if (!(dipole_ab > 0.0)) throw DomainError("MediumParams: dipole_ab must be > 0");
    if (!(dipole_bc > 0.0)) throw DomainError("MediumParams: dipole_bc must be > 0");
    if (!(eps_r > 0.0)) throw DomainError("MediumParams: eps_r must be > 0");
    if (!(bulk_index > 0.0)) throw DomainError("MediumParams: bulk_index must be > 0");
    if (!(omega_trans_s > 0.0)) throw DomainError("MediumParams: omega_trans_s must be > 0");
    if (!(omega_trans_p > 0.0)) throw DomainError("MediumParams: omega_trans_p must be > 0");
  }
};

// Characteristic intensity scales of the three-state absorber [W/m^2],
// together with the Rabi<->intensity conversion constant zeta.
struct IntensityScales {
  double i_sat3 = 0.0;  // three-state saturation intensity, zeta*G*G'/12
  double i_sat2 = 0.0;  // two-state saturation intensity, zeta*G^2/8
  double i_coh = 0.0;   // coherence intensity, zeta*gamma*G'
  double i_pump = 0.0;  // pump intensity, zeta*omega_p^2
  double zeta = 0.0;    // hbar^2 c eps0 eps_r / (2 d^2) [W s^2/m^2]
};

}  // namespace eitb
