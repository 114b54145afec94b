#ifndef KNOTQUBIT_GEOMETRY_HPP
#define KNOTQUBIT_GEOMETRY_HPP

#include <cstddef>
#include <vector>

#include "knotqubit/phys_params.hpp"

namespace knotqubit {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double a) const { return {a * x, a * y, a * z}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const;
};

// A polyline sampling of a space curve (dimensionless length units).
// If closed, the last point connects back to the first.
struct SpaceCurve {
  std::vector<Vec3> points;
  bool closed = false;

  // Throws std::invalid_argument unless there are >= 8 points, consecutive
  // points are distinct and all coordinates are finite.
  void validate() const;

  // Total chord length, including the closing chord when closed.
  double chord_length() const;
};

// Curvature kappa(s) sampled on strictly increasing arclength values.
// For closed profiles `period` is the full arclength of one turn; the last
// sample wraps to the first over the interval [s.back(), s.front() + period].
struct CurvatureProfile {
  std::vector<double> s;
  std::vector<double> kappa;
  bool closed = false;
  double period = 0.0;

  void validate() const;
};

// One piece of a nano-bar chain: a straight rod (kappa = 0) or a circular
// arc of the given radius (kappa = 1/radius) over the given length.
struct PiecewiseSegment {
  enum class Kind { Straight, Arc };
  Kind kind = Kind::Straight;
  double length = 0.0;
  double radius = 0.0;  // arcs only

  static PiecewiseSegment straight(double length) {
    return {Kind::Straight, length, 0.0};
  }
  static PiecewiseSegment arc(double length, double radius) {
    return {Kind::Arc, length, radius};
  }
};

// Resamples the curve at n points equally spaced in the cumulative
// chord-length parameter of the input polyline (endpoints preserved for open
// curves, the period for closed ones).  Output points lie on the input
// polyline; their parameter spacing is uniform to round-off.
// Throws if the total length is below 1e-12 (degenerate curve) or n < 8.
SpaceCurve reparametrize_arclength(const SpaceCurve& curve, std::size_t n);

// Curvature by central differences of the unit tangent.  Requires an
// arclength-reparameterized curve (uniform chord spacing to 1e-6 relative).
// Closed curves use periodic stencils, open ends one-sided second-order ones.
CurvatureProfile curvature_profile(const SpaceCurve& curve);

// Trapezoidal integral of kappa over s, with the periodic closure term for
// closed profiles.  For any closed knotted curve this is >= 4*pi.
double total_curvature(const CurvatureProfile& profile);

// Semiclassical bound-state count N_s = (1/4pi) * integral kappa ds.
// Equals integral sqrt(-2m V_eff)/(2 pi hbar) ds for the curvature-induced
// potential, so the parameters cancel; they are accepted for interface
// uniformity.
double state_count_estimate(const CurvatureProfile& profile,
                            const PhysParams& params = PhysParams::natural());

// Concatenates segments into a piecewise-constant kappa(s) starting at s = 0.
// Jumps are represented by node pairs straddling each boundary at +-eps/2
// (eps = 1e-9 of the total length), so s stays strictly increasing and the
// total length is exact.
CurvatureProfile compose_segments(const std::vector<PiecewiseSegment>& segments);

}  // namespace knotqubit

#endif  // KNOTQUBIT_GEOMETRY_HPP
