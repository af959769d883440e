#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "types.hpp"

// Exact numerical steady state of the two- and three-level master equation.
// This module is the oracle every closed form is checked against.
namespace eitb::steady {

enum class Levels { two, three };

// Generator of the master equation acting on the column-stacked density
// matrix, d vec(rho)/dt = L vec(rho). Dimension 9x9 (three-level) or 4x4.
struct Liouvillian {
  Eigen::MatrixXcd mat;
  Levels levels = Levels::three;
  AtomParams atom;
  DriveParams drive;

  int dim() const { return levels == Levels::three ? 3 : 2; }
};

// Basis order {a, b, c}. The excited state |b> decays to each ground state
// at rate gamma_sp; the ground-state coherence dephases through the
// Hermitian channel sigma_aa - sigma_cc at rate gamma_deph. The two-level
// variant keeps {a, b} with the single decay channel b->a.
Liouvillian build_liouvillian(const AtomParams& atom, const DriveParams& drive, Levels levels);

// Row vector t with t * vec(rho) = tr(rho); t * L = 0 for any trace-
// preserving generator.
Eigen::RowVectorXcd trace_functional(int dim);

// Unique steady state: one row of L is replaced by the trace constraint and
// the dense system is solved. Throws DegenerateSteadyState when the kernel
// of L is not one-dimensional (singular-value ratio below 1e-12).
// Two-level results are embedded in the 3x3 matrix with the c row/column
// zeroed so the return type is uniform.
Eigen::Matrix3cd solve_steady_state(const Liouvillian& liou);

// Ratio of the second-smallest singular value of L to the largest; the
// degeneracy detector used by solve_steady_state.
double kernel_gap(const Liouvillian& liou);

struct OpticalResponse {
  std::complex<double> chi;  // first-order susceptibility chi_ab
  double alpha = 0.0;        // absorption coefficient [1/m]
  double refr_index = 1.0;   // n from n^2 = 1 + Re[chi]
};

// Fixed fraction of max(gamma_sp, omega_p) used as the linear-response
// probe when omega_s is at or below it.
inline constexpr double kProbeFloorFactor = 1e-6;

// chi_ab = (2 N d_ab^2 / (hbar eps_r eps0)) rho_ab / omega_s from the exact
// steady state, alpha = (omega_s / (n c)) Im[chi] with n = sqrt(1 + Re[chi]).
// Re[chi] vanishes at exact resonance, so n = 1 there.
OpticalResponse numeric_response(const AtomParams& atom, const DriveParams& drive,
                                 const MediumParams& medium, Levels levels);

// numeric_response swept over the two-photon detuning at fixed delta_one.
std::vector<std::pair<double, OpticalResponse>> absorption_spectrum(
    const AtomParams& atom, const DriveParams& drive_template, const MediumParams& medium,
    const std::vector<double>& delta_grid);

}  // namespace eitb::steady
