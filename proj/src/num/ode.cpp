#include "num/ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "types.hpp"

namespace eitb::num {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

double hermite(double y0, double f0, double y1, double f1, double h, double t) {
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * f0 + (-2 * t3 + 3 * t2) * y1 +
         (t3 - t2) * h * f1;
}

}  // namespace

std::vector<OdeSample> integrate(const OdeRhs& rhs, std::vector<double> y0, double x0, double x1,
                                 const OdeOptions& opt) {
  const std::size_t n = y0.size();
  const double span = x1 - x0;
  if (!(span > 0.0)) throw DomainError("ode::integrate: x1 must exceed x0");
  if (!(opt.rel_tol > 0.0)) throw DomainError("ode::integrate: rel_tol must be > 0");

  double scale0 = 0.0;
  for (double v : y0) scale0 = std::max(scale0, std::fabs(v));
  const double abs_tol = opt.abs_tol > 0.0 ? opt.abs_tol : opt.rel_tol * std::max(scale0, 1e-300);

  std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);
  std::vector<double> y = std::move(y0);
  double x = x0;
  double h = opt.initial_step > 0.0 ? opt.initial_step : span / 100.0;

  std::vector<OdeSample> samples;
  samples.push_back({x, y});
  rhs(x, y, k1);

  std::vector<double> err_hist;
  for (int step = 0; step < opt.max_steps; ++step) {
    if (x >= x1) return samples;
    h = std::min(h, x1 - x);
    if (!(h > std::fabs(x) * 1e-14 + 1e-300)) {
      err_hist.push_back(h);
      throw ConvergenceError("ode::integrate: step size underflow", err_hist);
    }

    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    rhs(x + c2 * h, ytmp, k2);
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(x + c3 * h, ytmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(x + c4 * h, ytmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(x + c5 * h, ytmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs(x + h, ytmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    rhs(x + h, ynew, k7);

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * k7[i]);
      const double sc = abs_tol + opt.rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
      err = std::max(err, std::fabs(e) / sc);
    }

    if (err <= 1.0) {
      // Accept; emit dense sub-samples so that linear interpolation between
      // neighbours stays within the step tolerance.
      double curv = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double sc = abs_tol + opt.rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
        curv = std::max(curv, std::fabs(k7[i] - k1[i]) * h / (8.0 * sc));
      }
      const int pieces = std::clamp(static_cast<int>(std::ceil(std::sqrt(curv))), 1, 64);
      for (int p = 1; p <= pieces; ++p) {
        const double t = static_cast<double>(p) / pieces;
        if (p == pieces) {
          samples.push_back({x + h, ynew});
        } else {
          OdeSample s;
          s.x = x + t * h;
          s.y.resize(n);
          for (std::size_t i = 0; i < n; ++i) s.y[i] = hermite(y[i], k1[i], ynew[i], k7[i], h, t);
          samples.push_back(std::move(s));
        }
      }
      x += h;
      y = ynew;
      k1 = k7;  // FSAL
    }
    err_hist.push_back(err);

    const double fac = 0.9 * std::pow(1.0 / std::max(err, 1e-10), 0.2);
    h *= std::clamp(fac, 0.2, 5.0);
  }
  throw ConvergenceError("ode::integrate: step budget exhausted before reaching x1", err_hist);
}

}  // namespace eitb::num
