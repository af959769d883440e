#include "steady_state.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "constants.hpp"

namespace eitb::steady {

namespace {

using Eigen::MatrixXcd;
using std::complex;

constexpr complex<double> kI{0.0, 1.0};

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Column-stacked vectorization: -i[H, .] -> -i (I (x) H - H^T (x) I),
// D[B] -> conj(B) (x) B - (1/2) I (x) B'B - (1/2) (B'B)^T (x) I.
void add_dissipator(MatrixXcd& liou, const MatrixXcd& b, double rate) {
  if (rate == 0.0) return;
  const int n = static_cast<int>(b.rows());
  const MatrixXcd id = MatrixXcd::Identity(n, n);
  const MatrixXcd bdb = b.adjoint() * b;
  liou += rate * (kron(b.conjugate(), b) - 0.5 * kron(id, bdb) - 0.5 * kron(bdb.transpose(), id));
}

}  // namespace

Liouvillian build_liouvillian(const AtomParams& atom, const DriveParams& drive, Levels levels) {
  atom.validate();
  drive.validate();

  Liouvillian out;
  out.levels = levels;
  out.atom = atom;
  out.drive = drive;

  if (levels == Levels::three) {
    // Basis {a, b, c}; H/hbar = delta|a><a| + Delta|b><b|
    //                         + Omega_s(|a><b| + h.c.) + Omega_p(|c><b| + h.c.)
    MatrixXcd h = MatrixXcd::Zero(3, 3);
    h(0, 0) = drive.delta_two;
    h(1, 1) = drive.delta_one;
    h(0, 1) = h(1, 0) = drive.omega_s;
    h(2, 1) = h(1, 2) = drive.omega_p;

    const MatrixXcd id = MatrixXcd::Identity(3, 3);
    MatrixXcd liou = -kI * (kron(id, h) - kron(h.transpose(), id));

    MatrixXcd sig_ab = MatrixXcd::Zero(3, 3);
    sig_ab(0, 1) = 1.0;
    MatrixXcd sig_cb = MatrixXcd::Zero(3, 3);
    sig_cb(2, 1) = 1.0;
    MatrixXcd deph = MatrixXcd::Zero(3, 3);
    deph(0, 0) = 1.0;
    deph(2, 2) = -1.0;

    add_dissipator(liou, sig_ab, atom.gamma_sp);
    add_dissipator(liou, sig_cb, atom.gamma_sp);
    add_dissipator(liou, deph, atom.gamma_deph);
    out.mat = std::move(liou);
  } else {
    // Basis {a, b}; the signal detuning is the full offset from the a-b
    // transition, delta_one + delta_two.
    MatrixXcd h = MatrixXcd::Zero(2, 2);
    h(1, 1) = drive.delta_one + drive.delta_two;
    h(0, 1) = h(1, 0) = drive.omega_s;

    const MatrixXcd id = MatrixXcd::Identity(2, 2);
    MatrixXcd liou = -kI * (kron(id, h) - kron(h.transpose(), id));

    MatrixXcd sig_ab = MatrixXcd::Zero(2, 2);
    sig_ab(0, 1) = 1.0;
    add_dissipator(liou, sig_ab, atom.gamma_sp);
    out.mat = std::move(liou);
  }
  return out;
}

Eigen::RowVectorXcd trace_functional(int dim) {
  Eigen::RowVectorXcd t = Eigen::RowVectorXcd::Zero(dim * dim);
  for (int i = 0; i < dim; ++i) t(i + dim * i) = 1.0;
  return t;
}

double kernel_gap(const Liouvillian& liou) {
  Eigen::JacobiSVD<MatrixXcd> svd(liou.mat);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  if (smax == 0.0) return 0.0;  // L = 0, fully degenerate
  return sv(sv.size() - 2) / smax;
}

Eigen::Matrix3cd solve_steady_state(const Liouvillian& liou) {
  const int dim = liou.dim();
  const int n2 = dim * dim;

  if (kernel_gap(liou) < 1e-12)
    throw DegenerateSteadyState(
        "solve_steady_state: no unique steady state (Liouvillian kernel is degenerate)");

  MatrixXcd a = liou.mat;
  a.row(0) = trace_functional(dim);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n2);
  rhs(0) = 1.0;
  Eigen::VectorXcd x = a.partialPivLu().solve(rhs);

  MatrixXcd rho = Eigen::Map<MatrixXcd>(x.data(), dim, dim);
  rho = 0.5 * (rho + rho.adjoint()).eval();  // scrub asymmetric roundoff
  rho /= rho.trace().real();

  Eigen::Matrix3cd out = Eigen::Matrix3cd::Zero();
  out.topLeftCorner(dim, dim) = rho;
  return out;
}

OpticalResponse numeric_response(const AtomParams& atom, const DriveParams& drive,
                                 const MediumParams& medium, Levels levels) {
  medium.validate();
  const double floor = kProbeFloorFactor * std::max(atom.gamma_sp, drive.omega_p);
  DriveParams probed = drive;
  if (probed.omega_s < floor) probed.omega_s = floor;
  if (!(probed.omega_s > 0.0))
    throw DomainError("numeric_response: omega_s, gamma_sp and omega_p are all zero");

  const Eigen::Matrix3cd rho = solve_steady_state(build_liouvillian(atom, probed, levels));

  const double prefac = 2.0 * medium.density * medium.dipole_ab * medium.dipole_ab /
                        (kHbar * medium.eps_r * kEps0);
  OpticalResponse resp;
  resp.chi = prefac * rho(0, 1) / probed.omega_s;
  const double n2 = 1.0 + resp.chi.real();
  if (!(n2 > 0.0)) throw DomainError("numeric_response: 1 + Re[chi] must be positive");
  resp.refr_index = std::sqrt(n2);
  resp.alpha = medium.omega_trans_s / (resp.refr_index * kSpeedOfLight) * resp.chi.imag();
  return resp;
}

std::vector<std::pair<double, OpticalResponse>> absorption_spectrum(
    const AtomParams& atom, const DriveParams& drive_template, const MediumParams& medium,
    const std::vector<double>& delta_grid) {
  std::vector<std::pair<double, OpticalResponse>> out;
  out.reserve(delta_grid.size());
  for (double delta : delta_grid) {
    DriveParams d = drive_template;
    d.delta_two = delta;
    out.emplace_back(delta, numeric_response(atom, d, medium, Levels::three));
  }
  return out;
}

}  // namespace eitb::steady
