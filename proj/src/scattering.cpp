#include "knotqubit/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace knotqubit {

namespace {

using complexd = std::complex<double>;

struct Mat2 {
  complexd a, b, c, d;

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }

  double max_abs() const {
    return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  }
};

// Region wave number with the decaying (Im >= 0) branch for evanescent cases.
complexd region_wavenumber(double q_sq, double v_scaled) {
  const double arg = q_sq - v_scaled;
  if (arg >= 0.0) return {std::sqrt(arg), 0.0};
  return {0.0, std::sqrt(-arg)};
}

// Amplitude map (A,B)_left = M (A,B)_right across the interface at s = b
// between wave numbers w1 (left) and w2 (right), from continuity of psi and
// psi'.
Mat2 interface_matrix(double b, complexd w1, complexd w2) {
  const complexd i{0.0, 1.0};
  const complexd ratio = w2 / w1;
  const complexd p = 0.5 * (1.0 + ratio);
  const complexd m = 0.5 * (1.0 - ratio);
  return {p * std::exp(i * (w2 - w1) * b), m * std::exp(-i * (w2 + w1) * b),
          m * std::exp(i * (w2 + w1) * b), p * std::exp(-i * (w2 - w1) * b)};
}

}  // namespace

ScatteringAmplitudes scattering_amplitudes(double q, const PotentialProfile& potential,
                                           const PhysParams& params) {
  if (!(q > 0.0)) throw std::invalid_argument("scattering: q must be positive");
  potential.validate();
  if (potential.representation != PotentialRep::PiecewiseConstant)
    throw std::invalid_argument("scattering: potential must be piecewise constant");
  if (potential.boundary != BoundaryKind::Open)
    throw std::invalid_argument("scattering: open boundaries required");

  const double two_m_over_h2 = 1.0 / params.kinetic_factor();
  double q_sq = q * q;

  // Branch-point guard: nudge q^2 off any region threshold.
  std::vector<double> v_scaled;
  v_scaled.push_back(0.0);  // asymptotic left
  for (double v : potential.values) v_scaled.push_back(v * two_m_over_h2);
  v_scaled.push_back(0.0);  // asymptotic right
  for (double v : v_scaled) {
    if (std::abs(q_sq - v) < 1e-14) {
      q_sq += 1e-12;
      break;
    }
  }

  Mat2 total{1.0, 0.0, 0.0, 1.0};
  double log_scale = 0.0;
  for (std::size_t j = 0; j < potential.breakpoints.size(); ++j) {
    const complexd w_left = region_wavenumber(q_sq, v_scaled[j]);
    const complexd w_right = region_wavenumber(q_sq, v_scaled[j + 1]);
    total = total * interface_matrix(potential.breakpoints[j], w_left, w_right);
    const double scale = total.max_abs();
    if (scale > 0.0) {
      total.a /= scale;
      total.b /= scale;
      total.c /= scale;
      total.d /= scale;
      log_scale += std::log(scale);
    }
  }

  // Incoming from the left, nothing incoming from the right:
  // t = 1/M11, r = M21/M11; equal asymptotic wave numbers cancel the flux
  // factors.
  ScatteringAmplitudes amp;
  amp.r = total.c / total.a;
  amp.t = std::exp(-log_scale) / total.a;
  amp.R = std::norm(amp.r);
  amp.T = std::norm(amp.t);
  return amp;
}

TransmissionPoint transmission(double q, const PotentialProfile& potential,
                               const PhysParams& params) {
  return {q, scattering_amplitudes(q, potential, params).T};
}

std::vector<TransmissionPoint> transmission_sweep(double q_min, double q_max,
                                                  std::size_t n,
                                                  const PotentialProfile& potential,
                                                  const PhysParams& params) {
  if (!(q_min > 0.0) || !(q_max > q_min))
    throw std::invalid_argument("transmission_sweep: need 0 < q_min < q_max");
  if (n < 2) throw std::invalid_argument("transmission_sweep: n >= 2 required");
  std::vector<TransmissionPoint> sweep;
  sweep.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double q = q_min + (q_max - q_min) * double(i) / double(n - 1);
    sweep.push_back(transmission(q, potential, params));
  }
  return sweep;
}

std::vector<double> find_resonances(const std::vector<TransmissionPoint>& sweep,
                                    double threshold,
                                    const std::function<double(double)>& evaluate) {
  if (sweep.empty()) throw std::invalid_argument("find_resonances: empty sweep");

  std::vector<double> resonances;
  for (std::size_t i = 2; i + 2 < sweep.size(); ++i) {
    const double T = sweep[i].T;
    if (T < threshold) continue;
    // Strict maximum within the 5-sample window; a flat T = 1 plateau never
    // qualifies.
    if (!(T > sweep[i - 1].T && T > sweep[i + 1].T && T > sweep[i - 2].T &&
          T > sweep[i + 2].T))
      continue;

    double q_peak;
    if (evaluate) {
      // Golden-section maximization on the bracket around the sample.
      constexpr double inv_phi = 0.6180339887498949;
      double a = sweep[i - 1].q, b = sweep[i + 1].q;
      double x1 = b - inv_phi * (b - a);
      double x2 = a + inv_phi * (b - a);
      double f1 = evaluate(x1), f2 = evaluate(x2);
      while (b - a > 1e-5) {
        if (f1 < f2) {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + inv_phi * (b - a);
          f2 = evaluate(x2);
        } else {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - inv_phi * (b - a);
          f1 = evaluate(x1);
        }
      }
      q_peak = 0.5 * (a + b);
    } else {
      // Parabolic interpolation through the three samples.
      const double y0 = sweep[i - 1].T, y1 = sweep[i].T, y2 = sweep[i + 1].T;
      const double denom = y0 - 2.0 * y1 + y2;
      const double shift = denom != 0.0 ? 0.5 * (y0 - y2) / denom : 0.0;
      q_peak = sweep[i].q + shift * (sweep[i + 1].q - sweep[i].q);
    }
    resonances.push_back(q_peak);
  }
  return resonances;
}

}  // namespace knotqubit
