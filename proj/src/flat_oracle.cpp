#include "toriclag/flat_oracle.hpp"

#include "toriclag/angles.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace toriclag::flat {

namespace {

Vec shifted(const Vec& p, int i, Real delta) {
  Vec q = p;
  q[i] += delta;
  return q;
}

Vec first_derivative(const ChartMap& f, const Vec& p, int i, const DifferenceScheme& s) {
  const Real h = s.h;
  if (s.extrapolate_first) {
    return (-f(shifted(p, i, 2 * h)) + 8 * f(shifted(p, i, h)) - 8 * f(shifted(p, i, -h)) +
            f(shifted(p, i, -2 * h))) /
           (12 * h);
  }
  return (f(shifted(p, i, h)) - f(shifted(p, i, -h))) / (2 * h);
}

Vec second_derivative_diag(const ChartMap& f, const Vec& p, const Vec& f0, int i, Real h) {
  return (f(shifted(p, i, h)) - 2 * f0 + f(shifted(p, i, -h))) / (h * h);
}

Vec second_derivative_mixed(const ChartMap& f, const Vec& p, int i, int j, Real h) {
  Vec pp = shifted(shifted(p, i, h), j, h);
  Vec pm = shifted(shifted(p, i, h), j, -h);
  Vec mp = shifted(shifted(p, i, -h), j, h);
  Vec mm = shifted(shifted(p, i, -h), j, -h);
  return (f(pp) - f(pm) - f(mp) + f(mm)) / (4 * h * h);
}

Vec second_derivative(const ChartMap& f, const Vec& p, const Vec& f0, int i, int j,
                      const DifferenceScheme& s) {
  auto plain = [&](Real h) {
    return i == j ? second_derivative_diag(f, p, f0, i, h) : second_derivative_mixed(f, p, i, j, h);
  };
  if (s.extrapolate_second) return (4 * plain(s.h / 2) - plain(s.h)) / 3;
  return plain(s.h);
}

}  // namespace

GeometrySample geometry_sample(const ChartMap& chart, const Vec& point,
                               const DifferenceScheme& scheme) {
  GeometrySample g;
  g.point = point;
  g.position = chart(point);
  const int k = static_cast<int>(point.size());
  const int n = static_cast<int>(g.position.size());

  g.tangents.resize(n, k);
  for (int i = 0; i < k; ++i) g.tangents.col(i) = first_derivative(chart, point, i, scheme);
  g.metric = g.tangents.transpose() * g.tangents;

  Eigen::SelfAdjointEigenSolver<Mat> eig(g.metric);
  const Vec& ev = eig.eigenvalues();
  if (!(ev.minCoeff() > 0) || ev.maxCoeff() / ev.minCoeff() > 1e8L)
    throw std::runtime_error("degenerate chart point");

  // Orthonormal tangent basis for the normal projection.
  Eigen::HouseholderQR<Mat> qr(g.tangents);
  Mat q = qr.householderQ() * Mat::Identity(n, k);
  auto project_normal = [&](const Vec& v) -> Vec { return v - q * (q.transpose() * v); };

  Mat metric_inv = g.metric.inverse();
  Vec trace_term = Vec::Zero(n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Vec dij = (j >= i) ? second_derivative(chart, point, g.position, i, j, scheme)
                         : second_derivative(chart, point, g.position, j, i, scheme);
      trace_term += metric_inv(i, j) * dij;
    }
  g.mean_curvature = project_normal(trace_term);
  g.position_normal = project_normal(g.position);

  g.omega_pullback = Mat::Zero(k, k);
  if (n % 2 == 0) {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        Real w = 0;
        for (int l = 0; l + 1 < n; l += 2)
          w += g.tangents(l, i) * g.tangents(l + 1, j) - g.tangents(l + 1, i) * g.tangents(l, j);
        g.omega_pullback(i, j) = w;
        g.omega_pullback(j, i) = -w;
      }
  }
  return g;
}

FlatImmersion::FlatImmersion(int m, std::vector<CurveFunction> curves, Real level)
    : m_(m), curves_(std::move(curves)), level_(level), radius_(std::sqrt((Real)2 * level)) {
  if (m_ < 1) throw std::invalid_argument("immersion dimension must be at least 1");
  if (static_cast<int>(curves_.size()) != m_)
    throw std::invalid_argument("need one curve per complex coordinate");
  if (!(level_ > 0)) throw std::invalid_argument("slice level must be positive");
}

Vec FlatImmersion::sphere_point(int chart, const Vec& u) const {
  if (chart != 0 && chart != 1) throw std::invalid_argument("chart index must be 0 or 1");
  Vec x(m_);
  if (m_ == 1) {
    x[0] = chart == 0 ? radius_ : -radius_;
    return x;
  }
  if (static_cast<int>(u.size()) != m_ - 1)
    throw std::invalid_argument("sphere coordinate dimension mismatch");
  const Real s = u.squaredNorm();
  const Real denom = 1 + s;
  for (int i = 0; i + 1 < m_; ++i) x[i] = radius_ * 2 * u[i] / denom;
  x[m_ - 1] = radius_ * (chart == 0 ? (1 - s) : (s - 1)) / denom;
  return x;
}

Vec FlatImmersion::embed(int chart, const Vec& ut) const {
  if (static_cast<int>(ut.size()) != m_) throw std::invalid_argument("chart point dimension");
  const Real t = ut[m_ - 1];
  Vec x = sphere_point(chart, ut.head(m_ - 1));
  Vec w(2 * m_);
  for (int j = 0; j < m_; ++j) {
    Complex wj = curves_[j].value(t) * x[j];
    w[2 * j] = wj.real();
    w[2 * j + 1] = wj.imag();
  }
  return w;
}

ChartMap FlatImmersion::chart(int which) const {
  FlatImmersion copy = *this;
  return [copy, which](const Vec& ut) { return copy.embed(which, ut); };
}

GeometrySample sample_geometry(const FlatImmersion& imm, const ChartPoint& p,
                               const DifferenceScheme& scheme) {
  return geometry_sample(imm.chart(p.chart), p.coords, scheme);
}

Mat pullback_omega(const FlatImmersion& imm, const ChartPoint& p, const DifferenceScheme& scheme) {
  return sample_geometry(imm, p, scheme).omega_pullback;
}

Vec mean_curvature(const FlatImmersion& imm, const ChartPoint& p, const DifferenceScheme& scheme) {
  return sample_geometry(imm, p, scheme).mean_curvature;
}

ShrinkerCheck check_self_shrinker(const FlatImmersion& imm, double a_const,
                                  const std::vector<ChartPoint>& samples,
                                  const DifferenceScheme& scheme) {
  ShrinkerCheck out;
  out.predicted_lambda = a_const / (2 * static_cast<double>(imm.level()));
  Real num = 0, den = 0, worst = 0;
  for (const auto& p : samples) {
    GeometrySample g = sample_geometry(imm, p, scheme);
    Vec residual = g.mean_curvature - (Real)out.predicted_lambda * g.position_normal;
    worst = std::max(worst, residual.norm());
    num += g.mean_curvature.dot(g.position_normal);
    den += g.position_normal.squaredNorm();
  }
  if (den == 0) throw std::runtime_error("position normal vanishes on all samples");
  out.max_residual = static_cast<double>(worst);
  out.fitted_lambda = static_cast<double>(num / den);
  out.sample_count = static_cast<int>(samples.size());
  return out;
}

double angle_full_formula_check(const FlatImmersion& imm, const MotionProfile& profile,
                                const AngleParams& params,
                                const std::vector<ChartPoint>& samples,
                                const DifferenceScheme& scheme) {
  const int m = imm.m();
  double worst = 0;
  for (const auto& p : samples) {
    const Real t = p.coords[m - 1];
    const Vec x = imm.sphere_point(p.chart, p.coords.head(m - 1));

    // Angle formula route, with the flat moment map <mu(x), zeta> = 1/2 sum x_k^2
    // for xi = zeta = (1,...,1): the third term is arg((kappa' + i f') sum x_k^2).
    const double kd = profile.kappa_dot(static_cast<double>(t));
    const double fd = profile.f.deriv(static_cast<double>(t));
    std::complex<double> term(0, 0);
    for (int k = 0; k < m; ++k) {
      const double xk2 = static_cast<double>(x[k] * x[k]);
      term += std::complex<double>(kd * xk2, fd * xk2);
    }
    const double theta_formula = profile.f.value(static_cast<double>(t)) * params.n() +
                                 params.theta() + std::arg(term);

    // Direct route: argument of the holomorphic volume form on the tangent frame.
    ChartMap chart = imm.chart(p.chart);
    ComplexMat frame(m, m);
    for (int i = 0; i < m; ++i) {
      Vec ti = first_derivative(chart, p.coords, i, scheme);
      for (int l = 0; l < m; ++l) frame(l, i) = Complex(ti[2 * l], ti[2 * l + 1]);
    }
    const Complex det = frame.determinant();
    Real scale = 1;
    for (int i = 0; i < m; ++i) scale *= frame.col(i).norm();
    if (std::abs(det) < 1e-20L * scale) throw std::runtime_error("degenerate frame");
    const double theta_direct = static_cast<double>(std::arg(det));

    worst = std::max(worst, circular_distance_pi(theta_formula, theta_direct));
  }
  return worst;
}

std::vector<CurveFunction> power_curves(const MotionProfile& profile,
                                        const std::vector<double>& xi) {
  std::vector<CurveFunction> curves;
  for (std::size_t j = 0; j < xi.size(); ++j) {
    const double xj = xi[j];
    const double nuj = j < profile.nu.size() ? profile.nu[j] : 0.0;
    auto value = [profile, xj, nuj](Real t) {
      const double td = static_cast<double>(t);
      const double rho = profile.rho.value(td);
      return Complex(std::pow((Real)rho, (Real)xj) *
                     std::exp(Complex(0, (Real)(profile.f.value(td) * xj + nuj))));
    };
    auto deriv = [profile, xj, nuj](Real t) {
      const double td = static_cast<double>(t);
      const double rho = profile.rho.value(td);
      const Complex c = std::pow((Real)rho, (Real)xj) *
                        std::exp(Complex(0, (Real)(profile.f.value(td) * xj + nuj)));
      const double kd = profile.rho.deriv(td) / rho;
      return Complex((Real)(xj * kd), (Real)(xj * profile.f.deriv(td))) * c;
    };
    curves.push_back(CurveFunction{value, deriv});
  }
  return curves;
}

FlatImmersion slag_immersion(int m, Real level) {
  const Real n = m;
  std::vector<CurveFunction> curves;
  for (int j = 0; j < m; ++j) {
    auto value = [n](Real t) {
      return std::pow((Real)1 / std::sin(t), 1 / n) * std::exp(Complex(0, t / n));
    };
    auto deriv = [n](Real t) {
      const Complex c = std::pow((Real)1 / std::sin(t), 1 / n) * std::exp(Complex(0, t / n));
      return Complex(-std::cos(t) / (n * std::sin(t)), 1 / n) * c;
    };
    curves.push_back(CurveFunction{value, deriv});
  }
  return FlatImmersion(m, std::move(curves), level);
}

FlatImmersion shrinker_immersion(int m, Real level) {
  std::vector<CurveFunction> curves;
  for (int j = 0; j < m; ++j) {
    curves.push_back(CurveFunction{[](Real t) { return std::exp(Complex(0, t)); },
                                   [](Real t) { return Complex(0, 1) * std::exp(Complex(0, t)); }});
  }
  return FlatImmersion(m, std::move(curves), level);
}

std::vector<ChartPoint> sample_points(const FlatImmersion& imm, int count, unsigned seed,
                                      Real t_min, Real t_max, Real u_radius, Real axis_margin) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ChartPoint> out;
  const int m = imm.m();
  int guard = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++guard > 100000) throw std::runtime_error("sample generation failed to satisfy margins");
    ChartPoint p;
    p.chart = static_cast<int>(rng() & 1u);
    p.coords.resize(m);
    for (int i = 0; i + 1 < m; ++i)
      p.coords[i] = u_radius * (2 * (Real)unit(rng) - 1);
    p.coords[m - 1] = t_min + (t_max - t_min) * (Real)unit(rng);
    Vec x = imm.sphere_point(p.chart, p.coords.head(m - 1));
    bool ok = true;
    for (int k = 0; k < m; ++k)
      if (std::abs(x[k]) < axis_margin * imm.radius()) ok = false;
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace toriclag::flat
