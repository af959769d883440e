#pragma once

// Physical constants (SI, CODATA 2018). Angular frequencies are rad/s
// throughout the library; conversions from Hz or lifetimes happen at the
// interface layer only.
namespace eitb {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSpeedOfLight = 299792458.0;   // m/s
inline constexpr double kHbar = 1.054571817e-34;       // J s
inline constexpr double kEps0 = 8.8541878128e-12;      // F/m

inline constexpr const char* kVersion = "1.0.0";

}  // namespace eitb
