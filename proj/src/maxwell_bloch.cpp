#include "maxwell_bloch.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "analytic.hpp"
#include "constants.hpp"
#include "num/fft.hpp"
#include "num/rng.hpp"

namespace eitb::mb {

namespace {

// Thomas algorithm for the tridiagonal column system.
std::vector<double> solve_tridiag(std::vector<double> lower, std::vector<double> diag,
                                  std::vector<double> upper, std::vector<double> rhs) {
  const int n = static_cast<int>(diag.size());
  for (int i = 1; i < n; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (int i = n - 2; i >= 0; --i) x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
  return x;
}

}  // namespace

std::vector<double> synthesize_pink_noise(int n, double rms, std::uint64_t seed) {
  if (n < 2) throw DomainError("synthesize_pink_noise: n must be >= 2");
  if (rms == 0.0) return std::vector<double>(n, 0.0);

  num::GaussianRng rng(seed);
  std::vector<std::complex<double>> spec(n, {0.0, 0.0});
  // One-sided spectrum with amplitude f^(-1/2) across the resolved band and
  // nothing beyond it; the frequency unit cancels in the final RMS rescale,
  // so bin index stands in for f.
  const int k_cut = std::max(2, static_cast<int>(kResolvedBandFraction * (n / 2)));
  for (int k = 1; k <= n / 2; ++k) {
    const double amp = k <= k_cut ? 1.0 / std::sqrt(static_cast<double>(k)) : 0.0;
    const double re = rng() * amp;
    const double im = (k == n - k || k == 0) ? 0.0 : rng() * amp;
    spec[k] = {re, im};
    if (k != n - k) spec[n - k] = std::conj(spec[k]);
  }
  num::fft(spec, true);

  std::vector<double> out(n);
  double sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    out[i] = spec[i].real();
    sum2 += out[i] * out[i];
  }
  const double have = std::sqrt(sum2 / n);
  const double scale = have > 0.0 ? rms / have : 0.0;
  for (double& v : out) v *= scale;
  return out;
}

std::vector<double> synthesize_signal(const NoisySignalSpec& spec, const MBGrid& grid) {
  spec.validate();
  grid.validate();
  const int n = grid.n_time;
  const double dt = grid.dt();
  std::vector<double> noise =
      synthesize_pink_noise(n, spec.noise_rms_frac * spec.peak_rabi, spec.seed);

  const double ramp_span = 0.05 * grid.t_total;
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    const double t = i * dt;
    const double arg = (t - spec.t_center) / spec.t_width;
    const double gauss = spec.peak_rabi * std::exp(-0.5 * arg * arg);
    double w = 1.0;
    if (t < ramp_span) w = t / ramp_span;
    const double t_from_end = grid.t_total - t;
    if (t_from_end < ramp_span) w = std::min(w, t_from_end / ramp_span);
    out[i] = gauss + noise[i] * w;
  }
  return out;
}

MBCoefficients quasi_static_coefficients(const AtomParams& atom, double omega_p, double xi,
                                         double bulk_index) {
  atom.validate();
  if (!(omega_p > 0.0)) throw DomainError("quasi_static_coefficients: omega_p must be > 0");
  if (!(atom.gamma_sp > 0.0)) throw DomainError("quasi_static_coefficients: gamma_sp must be > 0");
  if (!(bulk_index > 0.0)) throw DomainError("quasi_static_coefficients: bulk_index must be > 0");

  const double g = atom.gamma_sp;
  const double gd = atom.gamma_deph;
  const double gt = atom.gamma_total();
  const double op2 = omega_p * omega_p;
  const double alpha0 = 2.0 * xi / gt;

  MBCoefficients c;
  c.alpha = [=](double omega_abs) {
    const double os2 = omega_abs * omega_abs;
    double denom = 1.0 + os2 / op2;
    if (os2 != 0.0) denom += 12.0 * os2 / (g * gt);
    const double coh = op2 * gd * gt;
    const double num = (op2 + os2) * (op2 + os2);
    if (coh == 0.0) return 0.0;
    denom += num / coh;
    return alpha0 / denom;
  };
  c.v_g = [=](double omega_abs) {
    const double os2 = omega_abs * omega_abs;
    const double a2 = gd * gt + op2 + os2;
    const double num = 4.0 * gd * (gd * gt + os2) / gt - (op2 + os2);
    const double den = gd * gt * (1.0 + os2 / op2) + 12.0 * gd * os2 / g + (op2 + os2) * (op2 + os2) / op2;
    const double slope_term = 0.5 * xi * bulk_index * kSpeedOfLight * num / (den * a2);
    const double v = kSpeedOfLight / (bulk_index + slope_term);
    if (!(v > 0.0))
      throw DomainError("quasi_static_coefficients: non-positive group velocity at this field");
    return v;
  };
  return c;
}

std::vector<double> step_space(const MBGrid& grid, const std::vector<double>& column,
                               const MBCoefficients& coeffs, AmplitudeConvention convention,
                               int* iterations_used) {
  grid.validate();
  const int n = grid.n_time;
  if (static_cast<int>(column.size()) != n)
    throw DomainError("step_space: column length does not match the grid");
  const double dt = grid.dt();
  const double dz = grid.dz();
  const double amp = amplitude_factor(convention);
  const double two_dz = 2.0 / dz;

  // Known-column side of the scheme.
  std::vector<double> rhs(n);
  for (int t = 0; t < n; ++t) {
    const double a_j = coeffs.alpha(std::fabs(column[t]));
    const double inv_v = 1.0 / coeffs.v_g(std::fabs(column[t]));
    double ddt;
    if (t == 0)
      ddt = (column[1] - column[0]) / dt;
    else if (t == n - 1)
      ddt = (column[n - 1] - column[n - 2]) / dt;
    else
      ddt = (column[t + 1] - column[t - 1]) / (2.0 * dt);
    rhs[t] = two_dz * column[t] - inv_v * ddt - amp * a_j * column[t];
  }

  std::vector<double> next = column;  // trial values for the implicit column
  std::vector<double> lower(n), diag(n), upper(n);
  std::vector<double> trace;
  for (int iter = 0; iter < 50; ++iter) {
    for (int t = 0; t < n; ++t) {
      const double inv_v = 1.0 / coeffs.v_g(std::fabs(next[t]));
      const double a = coeffs.alpha(std::fabs(next[t]));
      diag[t] = two_dz + amp * a;
      lower[t] = upper[t] = 0.0;
      if (t == 0) {
        diag[t] -= inv_v / dt;
        upper[t] = inv_v / dt;
      } else if (t == n - 1) {
        diag[t] += inv_v / dt;
        lower[t] = -inv_v / dt;
      } else {
        lower[t] = -inv_v / (2.0 * dt);
        upper[t] = inv_v / (2.0 * dt);
      }
    }
    std::vector<double> solved = solve_tridiag(lower, diag, upper, rhs);

    double max_change = 0.0, max_val = 0.0;
    for (int t = 0; t < n; ++t) {
      max_change = std::max(max_change, std::fabs(solved[t] - next[t]));
      max_val = std::max(max_val, std::fabs(solved[t]));
    }
    next = std::move(solved);
    const double rel = max_change / std::max(max_val, 1e-300);
    trace.push_back(rel);
    if (rel < 1e-8) {
      if (iterations_used) *iterations_used = iter + 1;
      return next;
    }
  }
  throw ConvergenceError("step_space: fixed-point iteration did not converge", trace);
}

PsdResult psd(const std::vector<double>& series, double dt) {
  const int n = static_cast<int>(series.size());
  if (n < 8) throw DomainError("psd: need at least 8 samples");
  if (!(dt > 0.0)) throw DomainError("psd: dt must be > 0");

  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= n;
  std::vector<double> centered(series);
  for (double& v : centered) v -= mean;

  auto spec = num::fft_real(centered);
  PsdResult out;
  out.df = 1.0 / (n * dt);
  const int half = n / 2;
  out.freq.resize(half + 1);
  out.psd.resize(half + 1);
  const double norm = 1.0 / (static_cast<double>(n) * n * out.df);
  for (int k = 0; k <= half; ++k) {
    out.freq[k] = k * out.df;
    const double mag2 = std::norm(spec[k]);
    const bool unique_bin = (k == 0) || (2 * k == n);
    out.psd[k] = (unique_bin ? 1.0 : 2.0) * mag2 * norm;
  }
  return out;
}

FiltrationResult run_filtration(const NoisySignalSpec& spec, const MBGrid& grid,
                                const AtomParams& atom, double omega_p, double xi,
                                double bulk_index, const FiltrationOptions& options) {
  return run_filtration_boundary(synthesize_signal(spec, grid), grid, atom, omega_p, xi,
                                 bulk_index, options);
}

FiltrationResult run_filtration_boundary(const std::vector<double>& boundary, const MBGrid& grid,
                                         const AtomParams& atom, double omega_p, double xi,
                                         double bulk_index, const FiltrationOptions& options) {
  grid.validate();
  if (static_cast<int>(boundary.size()) != grid.n_time)
    throw DomainError("run_filtration: boundary length does not match the grid");
  if (options.space_samples < 2)
    throw DomainError("run_filtration: space_samples must be >= 2");
  const MBCoefficients coeffs = quasi_static_coefficients(atom, omega_p, xi, bulk_index);

  FiltrationResult res;
  res.input = boundary;

  const int j_count = grid.n_space;
  const int stride = std::max(1, j_count / (options.space_samples - 1));

  std::vector<double> column = res.input;
  res.sample_z.push_back(0.0);
  res.field.push_back(column);
  for (int j = 0; j < j_count; ++j) {
    int iters = 0;
    column = step_space(grid, column, coeffs, options.convention, &iters);
    res.max_iterations = std::max(res.max_iterations, iters);
    if ((j + 1) % stride == 0 || j + 1 == j_count) {
      res.sample_z.push_back((j + 1) * grid.dz());
      res.field.push_back(column);
    }
  }
  res.output = column;

  const double dt = grid.dt();
  for (int t = 0; t < grid.n_time; ++t) {
    res.energy_in += res.input[t] * res.input[t] * dt;
    res.energy_out += res.output[t] * res.output[t] * dt;
  }
  res.psd_input = psd(res.input, dt);
  res.psd_output = psd(res.output, dt);
  return res;
}

std::vector<double> upsample_double(const std::vector<double>& series) {
  const int n = static_cast<int>(series.size());
  if (n < 4) throw DomainError("upsample_double: need at least 4 samples");
  auto spec = num::fft_real(series);
  std::vector<std::complex<double>> padded(2 * n, {0.0, 0.0});
  for (int k = 0; k <= n / 2; ++k) padded[k] = spec[k];
  for (int k = n / 2 + 1; k < n; ++k) padded[n + k] = spec[k];
  if (n % 2 == 0) {
    // Split the Nyquist bin between its two images.
    padded[n / 2] *= 0.5;
    padded[2 * n - n / 2] = std::conj(padded[n / 2]);
  }
  num::fft(padded, true);
  std::vector<double> out(2 * n);
  for (int i = 0; i < 2 * n; ++i) out[i] = 2.0 * padded[i].real();
  return out;
}

double band_psd_ratio(const PsdResult& in, const PsdResult& out, double f_lo, double f_hi) {
  if (in.psd.size() != out.psd.size()) throw DomainError("band_psd_ratio: size mismatch");
  double power_in = 0.0, power_out = 0.0;
  int count = 0;
  for (std::size_t k = 1; k < in.psd.size(); ++k) {
    if (in.freq[k] < f_lo || in.freq[k] > f_hi) continue;
    power_in += in.psd[k];
    power_out += out.psd[k];
    ++count;
  }
  if (count == 0 || power_in <= 0.0)
    throw DomainError("band_psd_ratio: no usable bins in the band");
  return power_out / power_in;
}

}  // namespace eitb::mb
