// Finite-difference differential-geometry oracle in flat C^m: evaluates the
// explicit one-parameter Lagrangian families over sphere slices and verifies
// the Lagrangian condition, minimality, the self-shrinker equation and the
// full Lagrangian-angle formula, independently of the closed-form theory.
//
// Chart maps and difference quotients run in long double internally; with
// plain double the cancellation noise of first differences at h = 1e-5 sits
// at the 1e-9 tolerance itself. Reported values are double.
#pragma once

#include "toriclag/profiles.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

namespace toriclag::flat {

using Real = long double;
using Complex = std::complex<Real>;
using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using ComplexMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

struct DifferenceScheme {
  Real h = 1e-4L;
  bool extrapolate_first = true;    // 4th-order centered first derivatives
  bool extrapolate_second = false;  // Richardson-extrapolated second derivatives
};

/// Smooth map from chart coordinates to ambient Euclidean coordinates.
using ChartMap = std::function<Vec(const Vec&)>;

struct GeometrySample {
  Vec point;           // chart coordinates
  Vec position;        // F(point) in R^n
  Mat tangents;        // n x k, column i = dF/du^i
  Mat metric;          // k x k induced metric
  Vec mean_curvature;  // H in R^n
  Vec position_normal; // normal part of the position vector
  Mat omega_pullback;  // k x k, standard symplectic form on tangent pairs (n even)
};

/// All first/second-order data of `chart` at `point` by centered differences.
/// Throws "degenerate chart point" when the induced metric has condition
/// number above 1e8.
GeometrySample geometry_sample(const ChartMap& chart, const Vec& point,
                               const DifferenceScheme& scheme);

/// Complex curve of t packaged with its derivative.
struct CurveFunction {
  std::function<Complex(Real)> value;
  std::function<Complex(Real)> deriv;
};

/// The immersion (x, t) -> (c_1(t) x^1, ..., c_m(t) x^m) over the sphere
/// sum (x^j)^2 = 2 * level, the moment slice <mu(x), (1,..,1)> = level of the
/// real locus of C^m. Two stereographic-style charts cover the sphere minus a
/// pole each.
class FlatImmersion {
 public:
  FlatImmersion(int m, std::vector<CurveFunction> curves, Real level);

  int m() const { return m_; }
  Real level() const { return level_; }
  Real radius() const { return radius_; }  // sqrt(2 * level)

  /// Chart 0 misses the pole -R e_m, chart 1 misses +R e_m. For m = 1 the
  /// "sphere" is the point pair {+R, -R} selected by the chart index.
  Vec sphere_point(int chart, const Vec& u) const;
  /// Full chart map (u^1..u^{m-1}, t) -> R^{2m}, real/imaginary interleaved.
  ChartMap chart(int chart) const;
  Vec embed(int chart, const Vec& ut) const;

  Complex curve(int j, Real t) const { return curves_[j].value(t); }
  Complex curve_deriv(int j, Real t) const { return curves_[j].deriv(t); }

 private:
  int m_;
  std::vector<CurveFunction> curves_;
  Real level_;
  Real radius_;
};

struct ChartPoint {
  int chart = 0;
  Vec coords;  // (u^1..u^{m-1}, t)
};

GeometrySample sample_geometry(const FlatImmersion& imm, const ChartPoint& p,
                               const DifferenceScheme& scheme);

/// Pullback of the standard symplectic form on the tangent frame; all entries
/// vanish on a Lagrangian immersion up to differencing error.
Mat pullback_omega(const FlatImmersion& imm, const ChartPoint& p, const DifferenceScheme& scheme);

Vec mean_curvature(const FlatImmersion& imm, const ChartPoint& p, const DifferenceScheme& scheme);

struct ShrinkerCheck {
  double max_residual = 0;     // max |H - predicted_lambda * F_perp|
  double fitted_lambda = 0;    // least-squares lambda over the samples
  double predicted_lambda = 0; // A / (2 * level)
  int sample_count = 0;
};

ShrinkerCheck check_self_shrinker(const FlatImmersion& imm, double a_const,
                                  const std::vector<ChartPoint>& samples,
                                  const DifferenceScheme& scheme);

/// Lagrangian angle two ways: the angle formula with the explicit flat moment
/// map versus arg of the pullback of dw^1 ^ ... ^ dw^m on a numeric tangent
/// frame. Returns the max circular distance mod pi over the samples.
double angle_full_formula_check(const FlatImmersion& imm, const MotionProfile& profile,
                                const AngleParams& params,
                                const std::vector<ChartPoint>& samples,
                                const DifferenceScheme& scheme);

/// Curves c_j(t) = rho(t)^{xi_j} e^{i (f(t) xi_j + nu_j)} built from a motion
/// profile (missing nu entries read as 0).
std::vector<CurveFunction> power_curves(const MotionProfile& profile,
                                        const std::vector<double>& xi);

/// The special Lagrangian family: curves of the sine profile with N = m.
FlatImmersion slag_immersion(int m, Real level);

/// The compact self-shrinker family: c_j(t) = e^{it}.
FlatImmersion shrinker_immersion(int m, Real level);

/// Deterministic sample points with chart-boundary and coordinate-hyperplane
/// margins: |u| components within u_radius, every sphere coordinate at least
/// axis_margin * radius in magnitude, t in [t_min, t_max].
std::vector<ChartPoint> sample_points(const FlatImmersion& imm, int count, unsigned seed,
                                      Real t_min, Real t_max, Real u_radius = 1.0L,
                                      Real axis_margin = 0.2L);

}  // namespace toriclag::flat
