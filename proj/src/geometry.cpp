#include "knotqubit/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace knotqubit {

namespace {

constexpr double kDegenerateLength = 1e-12;
// Resampling a polyline leaves second-order chord-length variation where the
// new points straddle source vertices; 1e-3 passes that while still rejecting
// curves that were never reparameterized.
constexpr double kUniformSpacingTol = 1e-3;

bool finite(const Vec3& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

// Cumulative chord-length parameter of the polyline; includes the closing
// chord for closed curves, so cum.back() is the total length (period).
std::vector<double> cumulative_chords(const SpaceCurve& curve) {
  const auto& p = curve.points;
  std::vector<double> cum(p.size() + (curve.closed ? 1 : 0), 0.0);
  for (std::size_t i = 1; i < p.size(); ++i)
    cum[i] = cum[i - 1] + (p[i] - p[i - 1]).norm();
  if (curve.closed)
    cum.back() = cum[p.size() - 1] + (p.front() - p.back()).norm();
  return cum;
}

Vec3 point_at_parameter(const SpaceCurve& curve, const std::vector<double>& cum,
                        double u) {
  const auto& p = curve.points;
  const std::size_t n_seg = cum.size() - 1;
  // Locate the segment containing u.
  std::size_t lo = 0, hi = n_seg;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (cum[mid] <= u ? lo : hi) = mid;
  }
  const Vec3& a = p[lo];
  const Vec3& b = p[(lo + 1) % p.size()];
  const double len = cum[lo + 1] - cum[lo];
  const double w = len > 0.0 ? (u - cum[lo]) / len : 0.0;
  return a + (b - a) * w;
}

}  // namespace

double Vec3::norm() const { return std::sqrt(dot(*this)); }

void SpaceCurve::validate() const {
  if (points.size() < 8)
    throw std::invalid_argument("SpaceCurve: at least 8 points required");
  for (const auto& p : points)
    if (!finite(p)) throw std::invalid_argument("SpaceCurve: non-finite coordinate");
  for (std::size_t i = 1; i < points.size(); ++i)
    if ((points[i] - points[i - 1]).norm() == 0.0)
      throw std::invalid_argument("SpaceCurve: consecutive points coincide");
}

double SpaceCurve::chord_length() const { return cumulative_chords(*this).back(); }

void CurvatureProfile::validate() const {
  if (s.size() != kappa.size())
    throw std::invalid_argument("CurvatureProfile: s and kappa sizes differ");
  if (s.size() < 2)
    throw std::invalid_argument("CurvatureProfile: at least 2 samples required");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!(s[i] > s[i - 1]))
      throw std::invalid_argument("CurvatureProfile: s not strictly increasing");
  for (double k : kappa) {
    if (!std::isfinite(k) || k < 0.0)
      throw std::invalid_argument("CurvatureProfile: kappa must be finite and >= 0");
  }
  if (closed && !(period > s.back() - s.front()))
    throw std::invalid_argument("CurvatureProfile: closed profile needs period > span");
}

SpaceCurve reparametrize_arclength(const SpaceCurve& curve, std::size_t n) {
  curve.validate();
  if (n < 8) throw std::invalid_argument("reparametrize_arclength: n >= 8 required");

  const auto cum = cumulative_chords(curve);
  const double total = cum.back();
  if (total < kDegenerateLength)
    throw std::invalid_argument("reparametrize_arclength: degenerate curve");

  SpaceCurve out;
  out.closed = curve.closed;
  out.points.reserve(n);
  const double step = curve.closed ? total / double(n) : total / double(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == 0) {
      out.points.push_back(curve.points.front());
    } else if (!curve.closed && j == n - 1) {
      out.points.push_back(curve.points.back());
    } else {
      out.points.push_back(point_at_parameter(curve, cum, step * double(j)));
    }
  }
  return out;
}

CurvatureProfile curvature_profile(const SpaceCurve& curve) {
  curve.validate();
  const auto& p = curve.points;
  if (p.size() < 5)
    throw std::invalid_argument("curvature_profile: at least 5 points required");

  const auto cum = cumulative_chords(curve);
  const double total = cum.back();
  const std::size_t n = p.size();
  const double h = total / double(cum.size() - 1);
  for (std::size_t i = 1; i < cum.size(); ++i) {
    if (std::abs(cum[i] - cum[i - 1] - h) > kUniformSpacingTol * h)
      throw std::invalid_argument(
          "curvature_profile: curve is not arclength-reparameterized");
  }

  // Unit tangent by central differences (one-sided second order at open ends).
  std::vector<Vec3> tangent(n);
  auto normalized = [](Vec3 v) {
    const double m = v.norm();
    if (m == 0.0) throw std::invalid_argument("curvature_profile: zero tangent");
    return v * (1.0 / m);
  };
  for (std::size_t i = 0; i < n; ++i) {
    Vec3 dp;
    if (curve.closed) {
      dp = p[(i + 1) % n] - p[(i + n - 1) % n];
    } else if (i == 0) {
      dp = p[0] * -3.0 + p[1] * 4.0 - p[2];
    } else if (i == n - 1) {
      dp = p[n - 1] * 3.0 - p[n - 2] * 4.0 + p[n - 3];
    } else {
      dp = p[i + 1] - p[i - 1];
    }
    tangent[i] = normalized(dp);
  }

  CurvatureProfile profile;
  profile.closed = curve.closed;
  profile.period = curve.closed ? total : 0.0;
  profile.s.assign(cum.begin(), cum.begin() + std::ptrdiff_t(n));
  profile.kappa.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec3 dT;
    if (curve.closed) {
      dT = tangent[(i + 1) % n] - tangent[(i + n - 1) % n];
    } else if (i == 0) {
      dT = tangent[0] * -3.0 + tangent[1] * 4.0 - tangent[2];
    } else if (i == n - 1) {
      dT = tangent[n - 1] * 3.0 - tangent[n - 2] * 4.0 + tangent[n - 3];
    } else {
      dT = tangent[i + 1] - tangent[i - 1];
    }
    profile.kappa[i] = dT.norm() / (2.0 * h);
  }
  profile.validate();
  return profile;
}

double total_curvature(const CurvatureProfile& profile) {
  profile.validate();
  double integral = 0.0;
  for (std::size_t i = 1; i < profile.s.size(); ++i)
    integral += 0.5 * (profile.kappa[i] + profile.kappa[i - 1]) *
                (profile.s[i] - profile.s[i - 1]);
  if (profile.closed) {
    const double gap = profile.period - (profile.s.back() - profile.s.front());
    integral += 0.5 * (profile.kappa.back() + profile.kappa.front()) * gap;
  }
  return integral;
}

double state_count_estimate(const CurvatureProfile& profile, const PhysParams&) {
  return total_curvature(profile) / (4.0 * std::numbers::pi);
}

CurvatureProfile compose_segments(const std::vector<PiecewiseSegment>& segments) {
  if (segments.empty())
    throw std::invalid_argument("compose_segments: empty segment list");
  double total = 0.0;
  for (const auto& seg : segments) {
    if (!(seg.length > 0.0))
      throw std::invalid_argument("compose_segments: segment length must be positive");
    if (seg.kind == PiecewiseSegment::Kind::Arc && !(seg.radius > 0.0))
      throw std::invalid_argument("compose_segments: arc radius must be positive");
    total += seg.length;
  }
  const double eps = 1e-9 * total;
  for (const auto& seg : segments)
    if (seg.length <= 2.0 * eps)
      throw std::invalid_argument("compose_segments: segment too short to represent");

  auto kappa_of = [](const PiecewiseSegment& seg) {
    return seg.kind == PiecewiseSegment::Kind::Arc ? 1.0 / seg.radius : 0.0;
  };

  CurvatureProfile profile;
  profile.s.push_back(0.0);
  profile.kappa.push_back(kappa_of(segments.front()));
  double boundary = 0.0;
  for (std::size_t j = 0; j + 1 < segments.size(); ++j) {
    boundary += segments[j].length;
    const double k_left = kappa_of(segments[j]);
    const double k_right = kappa_of(segments[j + 1]);
    if (k_left != k_right) {
      // Jump represented by a node pair straddling the boundary.
      profile.s.push_back(boundary - 0.5 * eps);
      profile.kappa.push_back(k_left);
      profile.s.push_back(boundary + 0.5 * eps);
      profile.kappa.push_back(k_right);
    }
  }
  profile.s.push_back(total);
  profile.kappa.push_back(kappa_of(segments.back()));
  profile.validate();
  return profile;
}

}  // namespace knotqubit
