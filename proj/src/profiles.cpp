#include "toriclag/profiles.hpp"

#include "toriclag/angles.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace toriclag {

double MotionProfile::kappa(double t) const { return std::log(rho.value(t)); }

double MotionProfile::kappa_dot(double t) const { return rho.deriv(t) / rho.value(t); }

void MotionProfile::validate(int samples) const {
  if (!(t_max > t_min)) throw std::invalid_argument("empty profile interval");
  for (int i = 1; i <= samples; ++i) {
    double t = t_min + (t_max - t_min) * i / (samples + 1);
    if (!(rho.value(t) > 0)) throw std::invalid_argument("profile scale rho must be positive");
    if (f.deriv(t) == 0) throw std::invalid_argument("profile derivative of f vanishes");
  }
}

AngleParams AngleParams::from_vectors(const LatticeVector& gamma, const RationalVector& zeta,
                                      const RationalVector& xi, const std::vector<double>& nu,
                                      double theta0) {
  if (gamma.size() != zeta.size() || zeta.size() != xi.size() || nu.size() != gamma.size())
    throw std::invalid_argument("angle parameter dimension mismatch");
  AngleParams p;
  p.n_exact_ = dot(zeta, gamma);
  p.n_ = static_cast<double>(*p.n_exact_);
  p.zeta_equals_xi_ = zeta == xi;
  p.theta_ = 0;
  for (std::size_t k = 0; k < nu.size(); ++k) p.theta_ += static_cast<double>(gamma[k]) * nu[k];
  p.theta_ = mod_two_pi(p.theta_);
  p.theta0_ = theta0;
  return p;
}

AngleParams AngleParams::reeb_regime(double n, double theta, double theta0) {
  AngleParams p;
  p.n_ = n;
  p.theta_ = theta;
  p.theta0_ = theta0;
  p.zeta_equals_xi_ = true;
  return p;
}

AngleParams AngleParams::generic_regime(double n, double theta, double theta0) {
  AngleParams p = reeb_regime(n, theta, theta0);
  p.zeta_equals_xi_ = false;
  return p;
}

bool AngleParams::n_exactly_zero() const {
  if (n_exact_) return *n_exact_ == 0;
  return n_ == 0.0;
}

double angle_reeb_case(const MotionProfile& profile, const AngleParams& params, double t) {
  if (!params.zeta_equals_xi())
    throw std::invalid_argument("angle formula requires zeta equal to the Reeb vector");
  const double kd = profile.kappa_dot(t);
  const double fd = profile.f.deriv(t);
  if (kd == 0 && fd == 0) throw std::runtime_error("profile stationary");

  const double fn_theta = profile.f.value(t) * params.n() + params.theta();
  const double angle = fn_theta + std::atan2(fd, kd);

  if (params.n() != 0) {
    // Same angle as arg(h') for h = e^{N kappa + i(f N + theta)}.
    const std::complex<double> hdot =
        params.n() * std::complex<double>(kd, fd) *
        std::exp(std::complex<double>(params.n() * profile.kappa(t), fn_theta));
    if (circular_distance_pi(angle, std::arg(hdot)) > 1e-9)
      throw std::logic_error("angle evaluations disagree between the two routes");
  }
  return mod_pi(angle);
}

double angle_rho_const_case(const MotionProfile& profile, const AngleParams& params, double t) {
  if (profile.rho.deriv(t) != 0) throw std::runtime_error("regime mismatch");
  return mod_pi(profile.f.value(t) * params.n() + params.theta() + kPi / 2);
}

bool check_slag_rho_const(const AngleParams& params, double tol) {
  if (!params.n_exactly_zero()) return false;
  return circular_distance_pi(params.theta() + kPi / 2, params.theta0()) <= tol;
}

double slag_conserved(const MotionProfile& profile, const AngleParams& params, double t) {
  if (!params.zeta_equals_xi())
    throw std::invalid_argument("conserved quantity requires zeta equal to the Reeb vector");
  if (!(params.n() > 0)) throw std::invalid_argument("conserved quantity requires N > 0");
  const double scale = std::exp(params.n() * profile.kappa(t));
  const double phase = params.theta() - params.theta0() + params.n() * profile.f.value(t);
  return scale * std::sin(phase);
}

MotionProfile make_slag_profile(const AngleParams& params, double conserved, double t_min,
                                double t_max) {
  if (!(params.n() > 0)) throw std::invalid_argument("profile generator requires N > 0");
  if (conserved == 0 && t_min <= 0 && 0 <= t_max)
    throw std::runtime_error("curve passes through the origin; logarithm branch undefined");

  const double n = params.n();
  const double delta = params.theta() - params.theta0();
  const double c = conserved;

  MotionProfile p;
  p.t_min = t_min;
  p.t_max = t_max;
  p.closed = false;
  p.rho = RealFunction{
      [n, c](double t) { return std::pow(t * t + c * c, 1.0 / (2 * n)); },
      [n, c](double t) {
        return std::pow(t * t + c * c, 1.0 / (2 * n)) * t / (n * (t * t + c * c));
      }};
  p.f = RealFunction{[n, c, delta](double t) { return (std::atan2(c, t) - delta) / n; },
                     [n, c](double t) { return -c / (n * (t * t + c * c)); }};
  return p;
}

MotionProfile sine_slag_profile(double n) {
  if (!(n > 0)) throw std::invalid_argument("profile requires N > 0");
  MotionProfile p;
  p.t_min = 0;
  p.t_max = kPi;
  p.closed = false;
  p.f = RealFunction{[n](double t) { return t / n; }, [n](double) { return 1.0 / n; }};
  p.rho = RealFunction{[n](double t) { return std::pow(1.0 / std::sin(t), 1.0 / n); },
                       [n](double t) {
                         return std::pow(1.0 / std::sin(t), 1.0 / n) * (-std::cos(t)) /
                                (n * std::sin(t));
                       }};
  return p;
}

MotionProfile unit_circle_profile() {
  MotionProfile p;
  p.t_min = 0;
  p.t_max = 2 * kPi;
  p.closed = true;
  p.f = RealFunction{[](double t) { return t; }, [](double) { return 1.0; }};
  p.rho = RealFunction{[](double) { return 1.0; }, [](double) { return 0.0; }};
  return p;
}

}  // namespace toriclag
