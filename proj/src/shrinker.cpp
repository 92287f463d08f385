#include "toriclag/shrinker.hpp"

#include "toriclag/angles.hpp"
#include "toriclag/profiles.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace toriclag {

namespace {

constexpr double kApexRadius = 1e-12;

// Rhs with an explicitly supplied continuous argument f of c.
ShrinkerDerivative rhs_with_argument(const std::complex<double>& c, double theta_t, double f,
                                     const ShrinkerParams& p) {
  const double rho = std::abs(c);
  const std::complex<double> conj_pow =
      std::pow(rho, p.n - 1) * std::exp(std::complex<double>(0, -(p.n - 1) * f));
  ShrinkerDerivative d;
  d.dc = std::exp(std::complex<double>(0, theta_t - p.theta)) * conj_pow;
  d.dtheta = p.a * std::pow(rho, p.n) * std::sin(f * p.n + p.theta - theta_t);
  return d;
}

// State layout for the integrator: (Re c, Im c, theta, f).
using StateVec = std::array<double, 4>;

StateVec derivative(const StateVec& y, const ShrinkerParams& p) {
  const std::complex<double> c(y[0], y[1]);
  const double rho2 = std::norm(c);
  if (rho2 < kApexRadius * kApexRadius) throw std::runtime_error("trajectory hit apex");
  ShrinkerDerivative d = rhs_with_argument(c, y[2], y[3], p);
  const double df = (d.dc.imag() * c.real() - d.dc.real() * c.imag()) / rho2;
  return {d.dc.real(), d.dc.imag(), d.dtheta, df};
}

StateVec axpy(const StateVec& y, double h, const StateVec& k) {
  return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
}

StateVec rk4_step(const StateVec& y, double h, const ShrinkerParams& p) {
  StateVec k1 = derivative(y, p);
  StateVec k2 = derivative(axpy(y, h / 2, k1), p);
  StateVec k3 = derivative(axpy(y, h / 2, k2), p);
  StateVec k4 = derivative(axpy(y, h, k3), p);
  StateVec out;
  for (int i = 0; i < 4; ++i) out[i] = y[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

// Second-order three-point first derivative on a possibly nonuniform stencil.
template <typename T>
T three_point_derivative(const T& prev, const T& mid, const T& next, double h1, double h2) {
  return (h1 * h1 * next - h2 * h2 * prev + (h2 * h2 - h1 * h1) * mid) / (h1 * h2 * (h1 + h2));
}

}  // namespace

ShrinkerDerivative ode_rhs(const ShrinkerState& state, const ShrinkerParams& params) {
  if (state.c_of_t == std::complex<double>(0, 0)) throw std::runtime_error("state at apex");
  return rhs_with_argument(state.c_of_t, state.theta_t, std::arg(state.c_of_t), params);
}

Trajectory integrate(const ShrinkerState& initial, const ShrinkerParams& params, double t_begin,
                     double t_end, double step) {
  if (!(step > 0)) throw std::invalid_argument("step must be positive");
  if (!(t_end > t_begin)) throw std::invalid_argument("empty integration span");
  if (std::abs(initial.c_of_t) < kApexRadius) throw std::runtime_error("trajectory hit apex");

  const double span = t_end - t_begin;
  const auto full_steps = static_cast<long long>(std::floor(span / step + 1e-12));
  const double remainder = span - static_cast<double>(full_steps) * step;

  Trajectory traj;
  traj.step = step;
  StateVec y{initial.c_of_t.real(), initial.c_of_t.imag(), initial.theta_t,
             std::arg(initial.c_of_t)};
  double t = t_begin;
  traj.samples.push_back({t, initial.c_of_t, y[2], y[3]});

  auto advance = [&](double h) {
    y = rk4_step(y, h, params);
    t += h;
    const std::complex<double> c(y[0], y[1]);
    if (std::abs(c) < kApexRadius) throw std::runtime_error("trajectory hit apex");
    traj.samples.push_back({t, c, y[2], y[3]});
  };
  for (long long i = 0; i < full_steps; ++i) advance(step);
  if (remainder > 1e-12 * std::max(1.0, std::abs(t_end))) advance(remainder);
  traj.samples.back().t = t_end;
  return traj;
}

double consistency_residual(const Trajectory& traj, const ShrinkerParams& params) {
  if (traj.samples.size() < 3) throw std::invalid_argument("need at least three samples");
  double worst = 0;
  for (std::size_t k = 1; k + 1 < traj.samples.size(); ++k) {
    const auto& s0 = traj.samples[k - 1];
    const auto& s1 = traj.samples[k];
    const auto& s2 = traj.samples[k + 1];
    const std::complex<double> cdot =
        three_point_derivative(s0.c, s1.c, s2.c, s1.t - s0.t, s2.t - s1.t);
    const double rho = std::abs(s1.c);
    const std::complex<double> expected =
        2.0 * std::pow(rho, params.n) *
        std::exp(std::complex<double>(0, s1.theta - params.theta - s1.f * params.n));
    worst = std::max(worst, std::abs(2.0 * std::conj(s1.c) * cdot - expected));
  }
  return worst;
}

double radial_consistency_residual(const Trajectory& traj, const ShrinkerParams& params) {
  if (traj.samples.size() < 3) throw std::invalid_argument("need at least three samples");
  double worst = 0;
  for (std::size_t k = 1; k + 1 < traj.samples.size(); ++k) {
    const auto& s0 = traj.samples[k - 1];
    const auto& s1 = traj.samples[k];
    const auto& s2 = traj.samples[k + 1];
    const double dr2 = three_point_derivative(std::norm(s0.c), std::norm(s1.c), std::norm(s2.c),
                                              s1.t - s0.t, s2.t - s1.t);
    const double expected = 2.0 * std::pow(std::abs(s1.c), params.n) *
                            std::cos(s1.theta - params.theta - s1.f * params.n);
    worst = std::max(worst, std::abs(dr2 - expected));
  }
  return worst;
}

double angle_equals_theta(const Trajectory& traj, const ShrinkerParams& params) {
  if (traj.samples.size() < 3) throw std::invalid_argument("need at least three samples");
  const AngleParams angle_params =
      AngleParams::reeb_regime(params.n, params.theta, /*theta0=*/0);
  double worst = 0;
  for (std::size_t k = 1; k + 1 < traj.samples.size(); ++k) {
    const auto& s0 = traj.samples[k - 1];
    const auto& s1 = traj.samples[k];
    const auto& s2 = traj.samples[k + 1];
    const double h1 = s1.t - s0.t, h2 = s2.t - s1.t;
    const double rho = std::abs(s1.c);
    const double kappa_dot = three_point_derivative(std::log(std::abs(s0.c)), std::log(rho),
                                                    std::log(std::abs(s2.c)), h1, h2);
    const double f_dot = three_point_derivative(s0.f, s1.f, s2.f, h1, h2);

    // Point reconstruction of the motion profile from the trajectory sample.
    MotionProfile local;
    local.t_min = s0.t;
    local.t_max = s2.t;
    const double f_val = s1.f;
    local.f = RealFunction{[f_val](double) { return f_val; }, [f_dot](double) { return f_dot; }};
    const double rho_dot = kappa_dot * rho;
    local.rho =
        RealFunction{[rho](double) { return rho; }, [rho_dot](double) { return rho_dot; }};

    const double angle = angle_reeb_case(local, angle_params, s1.t);
    worst = std::max(worst, circular_distance_pi(angle, s1.theta));
  }
  return worst;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t,re_c,im_c,theta\n";
  char line[160];
  for (const auto& s : traj.samples) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", s.t, s.c.real(), s.c.imag(),
                  s.theta);
    out += line;
  }
  return out;
}

}  // namespace toriclag
