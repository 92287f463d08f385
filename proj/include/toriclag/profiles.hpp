// Motion profiles (I, f, rho, tau_0) of the family F(p,t) = rho(t)·tau(t)·p,
// Lagrangian angles in the two metric-independent regimes, and special
// Lagrangian profile checks and generation.
#pragma once

#include "toriclag/exact.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace toriclag {

/// Scalar function of t packaged with its derivative.
struct RealFunction {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
};

struct MotionProfile {
  double t_min = 0;
  double t_max = 0;
  bool closed = false;  // interval wraps; period = t_max - t_min
  RealFunction f;       // torus motion multiplier along zeta
  RealFunction rho;     // positive radial scale
  std::vector<double> nu;  // phases of tau_0

  double kappa(double t) const;      // log rho
  double kappa_dot(double t) const;  // rho'/rho
  /// Spot-checks rho > 0 and f' != 0 on an interior sample grid.
  void validate(int samples = 33) const;
};

/// Constants of the angle formulas: N = <gamma, zeta>, theta = sum gamma_k nu^k,
/// and the target phase angle theta0.
class AngleParams {
 public:
  static AngleParams from_vectors(const LatticeVector& gamma, const RationalVector& zeta,
                                  const RationalVector& xi, const std::vector<double>& nu,
                                  double theta0);
  /// zeta = xi regime with N given directly (no exactness information).
  static AngleParams reeb_regime(double n, double theta, double theta0);
  /// rho-constant regime with N given directly and no zeta = xi claim.
  static AngleParams generic_regime(double n, double theta, double theta0);

  bool zeta_equals_xi() const { return zeta_equals_xi_; }
  bool n_exactly_zero() const;
  double n() const { return n_; }
  double theta() const { return theta_; }
  double theta0() const { return theta0_; }

 private:
  AngleParams() = default;
  double n_ = 0;
  double theta_ = 0;
  double theta0_ = 0;
  bool zeta_equals_xi_ = false;
  std::optional<Rat> n_exact_;
};

/// Lagrangian angle for zeta = xi: f N + theta + arg(kappa' + i f') mod pi.
/// Evaluated a second time as arg(h') with h = e^{N kappa + i(fN + theta)};
/// the two routes must agree.
double angle_reeb_case(const MotionProfile& profile, const AngleParams& params, double t);

/// Lagrangian angle for constant rho: f N + theta + pi/2 mod pi.
double angle_rho_const_case(const MotionProfile& profile, const AngleParams& params, double t);

/// Special Lagrangian condition in the rho-constant regime:
/// N = 0 and theta + pi/2 = theta0 mod pi.
bool check_slag_rho_const(const AngleParams& params, double tol = 1e-9);

/// Im(e^{i(theta - theta0)} e^{N(kappa + i f)}); t-independent exactly on
/// special Lagrangian profiles.
double slag_conserved(const MotionProfile& profile, const AngleParams& params, double t);

/// Profile with e^{N(kappa + i f)} = e^{-i(theta - theta0)} (t + i C) on
/// (t_min, t_max), taken with a continuous logarithm branch.
MotionProfile make_slag_profile(const AngleParams& params, double conserved, double t_min,
                                double t_max);

/// f = t/n, rho = (1/sin t)^{1/n} on (0, pi); conserved quantity 1.
MotionProfile sine_slag_profile(double n);

/// f = t, rho = 1, closed with period 2 pi (the unit-circle motion).
MotionProfile unit_circle_profile();

}  // namespace toriclag
