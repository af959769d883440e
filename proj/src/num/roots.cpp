#include "num/roots.hpp"

#include <cmath>

#include "types.hpp"

namespace eitb::num {

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol_abs) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi))
    throw DomainError("bisect: no sign change on the bracket");

  while (hi - lo > tol_abs) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }

  // One Newton polish with a secant slope; keep it only if it stays bracketed.
  double root = 0.5 * (lo + hi);
  const double slope = (fhi - flo) / (hi - lo);
  if (slope != 0.0 && std::isfinite(slope)) {
    const double polished = root - f(root) / slope;
    if (polished > lo && polished < hi) root = polished;
  }
  return root;
}

}  // namespace eitb::num
