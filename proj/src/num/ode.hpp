#pragma once

#include <functional>
#include <vector>

namespace eitb::num {

// Dormand-Prince 5(4) adaptive integrator for small systems. Dense output
// between accepted steps comes from cubic Hermite interpolation; the sample
// list is refined until its linear-interpolation error estimate stays below
// the step tolerance.
struct OdeOptions {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;  // 0: scaled automatically from the initial state
  double initial_step = 0.0;
  int max_steps = 200000;
};

struct OdeSample {
  double x;
  std::vector<double> y;
};

using OdeRhs = std::function<void(double x, const std::vector<double>& y, std::vector<double>& dydx)>;

// Integrates y' = f(x, y) over [x0, x1] and returns an ordered, dense sample
// list including both endpoints. Throws ConvergenceError when the step size
// underflows or the step budget is exhausted.
std::vector<OdeSample> integrate(const OdeRhs& rhs, std::vector<double> y0, double x0, double x1,
                                 const OdeOptions& opt);

}  // namespace eitb::num
