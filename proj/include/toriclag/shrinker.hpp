// The self-shrinker ODE system for (c(t), theta(t)) and its verification
// identities, integrated with fixed-step classical Runge-Kutta.
#pragma once

#include <complex>
#include <string>
#include <vector>

namespace toriclag {

struct ShrinkerParams {
  double n = 1;      // N = <gamma, zeta> > 0
  double theta = 0;  // sum gamma_k nu^k
  double a = 0;      // proportionality constant A in 2cH = A F_perp
};

struct ShrinkerState {
  std::complex<double> c_of_t;  // rho e^{i f}, nonzero
  double theta_t = 0;           // Lagrangian angle, continuous lift
};

struct ShrinkerDerivative {
  std::complex<double> dc;
  double dtheta;
};

struct TrajectorySample {
  double t;
  std::complex<double> c;
  double theta;
  double f;  // continuously tracked argument of c
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double step = 0;
};

/// Right-hand sides dc = e^{i(theta(t)-theta)} conj(c)^{N-1} and
/// dtheta = A rho^N sin(f N + theta - theta(t)), with rho = |c|, f = arg c.
ShrinkerDerivative ode_rhs(const ShrinkerState& state, const ShrinkerParams& params);

/// Classical fixed-step RK4; the argument of c is tracked continuously so
/// non-integer powers of conj(c) stay on one branch. A short final partial
/// step covers spans that are not integer multiples of the step.
Trajectory integrate(const ShrinkerState& initial, const ShrinkerParams& params, double t_begin,
                     double t_end, double step);

/// Max over interior samples of |2 conj(c) c' - 2 rho^N e^{i(theta(t)-theta-fN)}|
/// with c' a second-order finite difference.
double consistency_residual(const Trajectory& traj, const ShrinkerParams& params);

/// Real-part counterpart: max |d(rho^2)/dt - 2 rho^N cos(theta(t)-theta-fN)|.
double radial_consistency_residual(const Trajectory& traj, const ShrinkerParams& params);

/// Max circular distance mod pi between the profile angle formula evaluated on
/// the trajectory reconstruction (f = arg c, rho = |c|) and theta(t).
double angle_equals_theta(const Trajectory& traj, const ShrinkerParams& params);

/// Columns t, re_c, im_c, theta with a header row and 17 significant digits.
std::string trajectory_csv(const Trajectory& traj);

}  // namespace toriclag
