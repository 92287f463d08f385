// Canonical representatives and circular distances for angles valued in
// R/piZ (Lagrangian angles) and R/2piZ (phases).
#pragma once

#include <cmath>

namespace toriclag {

inline constexpr double kPi = 3.14159265358979323846;

inline double mod_pi(double a) {
  double r = std::fmod(a, kPi);
  if (r < 0) r += kPi;
  if (r >= kPi) r = 0;
  return r;
}

inline double mod_two_pi(double a) {
  double r = std::fmod(a, 2 * kPi);
  if (r < 0) r += 2 * kPi;
  if (r >= 2 * kPi) r = 0;
  return r;
}

inline double circular_distance_pi(double a, double b) {
  double d = mod_pi(a - b);
  return std::min(d, kPi - d);
}

inline double circular_distance_two_pi(double a, double b) {
  double d = mod_two_pi(a - b);
  return std::min(d, 2 * kPi - d);
}

}  // namespace toriclag
