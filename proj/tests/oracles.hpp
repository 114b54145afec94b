// Test-side oracles, independent of the library implementation paths they
// check.
#ifndef KNOTQUBIT_TESTS_ORACLES_HPP
#define KNOTQUBIT_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "knotqubit/geometry.hpp"

namespace oracles {

inline constexpr double pi = std::numbers::pi;

// ---- torus trefoil r(t) = ((2+cos 3t)cos 2t, (2+cos 3t)sin 2t, sin 3t) ----

inline knotqubit::Vec3 trefoil(double t) {
  return {(2.0 + std::cos(3.0 * t)) * std::cos(2.0 * t),
          (2.0 + std::cos(3.0 * t)) * std::sin(2.0 * t), std::sin(3.0 * t)};
}

inline knotqubit::Vec3 trefoil_d1(double t) {
  return {-3.0 * std::sin(3 * t) * std::cos(2 * t) -
              2.0 * (2 + std::cos(3 * t)) * std::sin(2 * t),
          -3.0 * std::sin(3 * t) * std::sin(2 * t) +
              2.0 * (2 + std::cos(3 * t)) * std::cos(2 * t),
          3.0 * std::cos(3 * t)};
}

inline knotqubit::Vec3 trefoil_d2(double t) {
  return {-9 * std::cos(3 * t) * std::cos(2 * t) + 12 * std::sin(3 * t) * std::sin(2 * t) -
              4 * (2 + std::cos(3 * t)) * std::cos(2 * t),
          -9 * std::cos(3 * t) * std::sin(2 * t) - 12 * std::sin(3 * t) * std::cos(2 * t) -
              4 * (2 + std::cos(3 * t)) * std::sin(2 * t),
          -9.0 * std::sin(3 * t)};
}

// Analytic curvature |r' x r''| / |r'|^3.
inline double trefoil_kappa(double t) {
  const auto d1 = trefoil_d1(t);
  const auto d2 = trefoil_d2(t);
  const double speed = d1.norm();
  return d1.cross(d2).norm() / (speed * speed * speed);
}

inline knotqubit::SpaceCurve trefoil_curve(int n) {
  knotqubit::SpaceCurve curve;
  curve.closed = true;
  curve.points.reserve(n);
  for (int i = 0; i < n; ++i) curve.points.push_back(trefoil(2.0 * pi * i / n));
  return curve;
}

// Composite Simpson quadrature on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int panels) {
  const double h = (b - a) / (2.0 * panels);
  double sum = f(a) + f(b);
  for (int i = 1; i < 2 * panels; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

inline double trefoil_arclength() {
  return simpson([](double t) { return trefoil_d1(t).norm(); }, 0.0, 2.0 * pi, 1 << 16);
}

inline double trefoil_total_curvature() {
  return simpson([](double t) { return trefoil_kappa(t) * trefoil_d1(t).norm(); }, 0.0,
                 2.0 * pi, 1 << 16);
}

// ---- transcendental root counting (tan forms of the well conditions) ----

// Counts sign changes of tan(x) - sqrt(C^2-x^2)/x (even) and
// tan(x) + x/sqrt(C^2-x^2) (odd) over (0, C), skipping tangent poles.
inline int count_even_roots(double C, int scan = 10000) {
  int count = 0;
  double prev = 0.0;
  bool have_prev = false;
  for (int i = 1; i < scan; ++i) {
    const double x = C * double(i) / scan;
    const double to_pole = std::abs(std::remainder(x, pi) - pi / 2.0);
    if (to_pole < 2.0 * C / scan) {
      have_prev = false;
      continue;
    }
    const double f = std::tan(x) - std::sqrt(C * C - x * x) / x;
    if (have_prev && (prev <= 0.0) != (f <= 0.0)) ++count;
    prev = f;
    have_prev = true;
  }
  return count;
}

inline int count_odd_roots(double C, int scan = 10000) {
  int count = 0;
  double prev = 0.0;
  bool have_prev = false;
  for (int i = 1; i < scan; ++i) {
    const double x = C * double(i) / scan;
    const double to_pole = std::abs(std::remainder(x, pi) - pi / 2.0);
    if (to_pole < 2.0 * C / scan) {
      have_prev = false;
      continue;
    }
    const double f = std::tan(x) + x / std::sqrt(C * C - x * x);
    if (have_prev && (prev <= 0.0) != (f <= 0.0)) ++count;
    prev = f;
    have_prev = true;
  }
  return count;
}

// ---- Ramsauer-Townsend transparency condition ----

// Solves sqrt(q^2 + depth_scaled) * width = n pi for q; returns the real
// solutions with q > 0 up to q_max.
inline std::vector<double> ramsauer_resonances(double width, double depth_scaled,
                                               double q_max) {
  std::vector<double> out;
  for (int n = 1;; ++n) {
    const double k_in = n * pi / width;
    const double q_sq = k_in * k_in - depth_scaled;
    if (q_sq <= 0.0) continue;
    const double q = std::sqrt(q_sq);
    if (q > q_max) break;
    out.push_back(q);
  }
  return out;
}

// ---- exact square double-well quantization (natural units) ----
// Wells of depth U0 = k0^2 and width D at [d/2, d/2+D] (mirrored), V = 0
// elsewhere.  Even/odd levels from matching cosh/sinh barrier solutions:
//   k D = pi - atan(k/q) - atan((k/q) * coth_or_tanh(q d / 2)) (+ n pi)

inline std::vector<double> exact_double_well_levels(double k0, double D, double d,
                                                    bool even, int branch_max = 4) {
  std::vector<double> levels;
  auto residual = [&](double k, int branch) {
    const double q = std::sqrt(k0 * k0 - k * k);
    const double barrier = even ? (std::cosh(q * d / 2.0) / std::sinh(q * d / 2.0))
                                : std::tanh(q * d / 2.0);
    return k * D - branch * pi + std::atan(k / q) + std::atan((k / q) * barrier);
  };
  for (int branch = 1; branch <= branch_max; ++branch) {
    double prev_k = 1e-9 * k0;
    double prev_f = residual(prev_k, branch);
    const int scan = 20000;
    for (int i = 1; i <= scan; ++i) {
      const double k = k0 * (1e-9 + (1.0 - 2e-9) * double(i) / scan);
      const double f = residual(k, branch);
      if ((prev_f <= 0.0) != (f <= 0.0)) {
        double a = prev_k, b = k, fa = prev_f;
        for (int it = 0; it < 100; ++it) {
          const double mid = 0.5 * (a + b);
          const double fm = residual(mid, branch);
          if ((fa <= 0.0) == (fm <= 0.0)) {
            a = mid;
            fa = fm;
          } else {
            b = mid;
          }
        }
        const double kr = 0.5 * (a + b);
        levels.push_back(kr * kr - k0 * k0);  // E = k^2 - k0^2 in natural units
      }
      prev_k = k;
      prev_f = f;
    }
  }
  return levels;
}

// ---- trajectory period from mean crossings ----

inline double period_from_samples(const std::vector<double>& t,
                                  const std::vector<double>& y) {
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= double(y.size());
  std::vector<double> crossings;
  for (std::size_t i = 1; i < y.size(); ++i) {
    const double a = y[i - 1] - mean, b = y[i] - mean;
    if ((a <= 0.0) != (b <= 0.0))
      crossings.push_back(t[i - 1] + (t[i] - t[i - 1]) * a / (a - b));
  }
  if (crossings.size() < 3) return 0.0;
  return 2.0 * (crossings.back() - crossings.front()) / double(crossings.size() - 1);
}

}  // namespace oracles

#endif  // KNOTQUBIT_TESTS_ORACLES_HPP
