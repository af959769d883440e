#pragma once

#include <functional>

namespace eitb::num {

// Root of f on [lo, hi] by bisection to the requested absolute tolerance,
// followed by one guarded Newton polish (secant-estimated derivative).
// Requires a sign change on the bracket; throws DomainError otherwise.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol_abs);

}  // namespace eitb::num
