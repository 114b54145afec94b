#include "knotqubit/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace knotqubit {

namespace {

double span_of(const std::vector<double>& breakpoints) {
  return breakpoints.back() - breakpoints.front();
}

}  // namespace

void PotentialProfile::validate() const {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("PotentialProfile: at least 2 breakpoints required");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw std::invalid_argument("PotentialProfile: breakpoints not strictly increasing");
  const std::size_t expected = representation == PotentialRep::PiecewiseConstant
                                   ? breakpoints.size() - 1
                                   : breakpoints.size();
  if (values.size() != expected)
    throw std::invalid_argument("PotentialProfile: value count inconsistent with representation");
  for (double v : values)
    if (!std::isfinite(v))
      throw std::invalid_argument("PotentialProfile: non-finite value");
  if (!(domain_max > domain_min))
    throw std::invalid_argument("PotentialProfile: empty domain");
  if (domain_min > breakpoints.front() || domain_max < breakpoints.back())
    throw std::invalid_argument("PotentialProfile: domain does not cover breakpoints");
}

double PotentialProfile::value_at(double s) const {
  if (s < breakpoints.front() || s > breakpoints.back()) return 0.0;
  if (representation == PotentialRep::PiecewiseConstant) {
    // A sample exactly on a jump takes the two-sided average, so symmetric
    // wells stay symmetric on grids whose nodes hit the region edges.
    const double tol = 1e-12 * (breakpoints.back() - breakpoints.front());
    const auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), s - tol);
    const std::size_t idx = std::size_t(it - breakpoints.begin());
    if (idx < breakpoints.size() && std::abs(s - breakpoints[idx]) <= tol) {
      const double left = idx == 0 ? 0.0 : values[idx - 1];
      const double right = idx + 1 == breakpoints.size() ? 0.0 : values[idx];
      return 0.5 * (left + right);
    }
    return values[idx - 1];
  }
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), s);
  const std::size_t idx = std::size_t(it - breakpoints.begin());
  if (idx == 0) return values.front();
  if (idx >= breakpoints.size()) return values.back();
  const double a = breakpoints[idx - 1], b = breakpoints[idx];
  const double w = (s - a) / (b - a);
  return values[idx - 1] * (1.0 - w) + values[idx] * w;
}

PotentialProfile PotentialProfile::to_piecewise_linear() const {
  validate();
  if (representation == PotentialRep::PiecewiseLinear) return *this;

  const double eps = 1e-9 * span_of(breakpoints);
  PotentialProfile out;
  out.representation = PotentialRep::PiecewiseLinear;
  out.domain_min = domain_min;
  out.domain_max = domain_max;
  out.boundary = boundary;
  out.breakpoints.push_back(breakpoints.front());
  out.values.push_back(values.front());
  for (std::size_t j = 1; j + 1 < breakpoints.size(); ++j) {
    if (values[j - 1] != values[j]) {
      out.breakpoints.push_back(breakpoints[j] - 0.5 * eps);
      out.values.push_back(values[j - 1]);
      out.breakpoints.push_back(breakpoints[j] + 0.5 * eps);
      out.values.push_back(values[j]);
    }
  }
  out.breakpoints.push_back(breakpoints.back());
  out.values.push_back(values.back());
  out.validate();
  return out;
}

PotentialProfile PotentialProfile::mirrored() const {
  PotentialProfile out = *this;
  out.breakpoints.assign(breakpoints.rbegin(), breakpoints.rend());
  for (double& b : out.breakpoints) b = -b;
  out.values.assign(values.rbegin(), values.rend());
  out.domain_min = -domain_max;
  out.domain_max = -domain_min;
  return out;
}

bool PotentialProfile::is_even(double tol) const {
  // Structural mirror check: breakpoints reflect onto each other and the
  // value sequence reads the same both ways.
  const double span = breakpoints.back() - breakpoints.front();
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (std::abs(breakpoints[i] + breakpoints[breakpoints.size() - 1 - i]) > tol * span)
      return false;
  }
  const double scale = std::max(max_abs_value(), 1e-300);
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (std::abs(values[j] - values[values.size() - 1 - j]) > tol * scale) return false;
  }
  return true;
}

double PotentialProfile::min_value() const {
  double m = 0.0;  // the implicit V = 0 outside the breakpoints
  for (double v : values) m = std::min(m, v);
  return m;
}

double PotentialProfile::max_abs_value() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

void DoubleWellModel::validate() const {
  if (!(kappa > 0.0)) throw std::invalid_argument("DoubleWellModel: kappa must be positive");
  if (!(D > 0.0)) throw std::invalid_argument("DoubleWellModel: D must be positive");
  if (d < 0.0) throw std::invalid_argument("DoubleWellModel: d must be non-negative");
  if (!(U0 > 0.0) || !(C > 0.0))
    throw std::invalid_argument("DoubleWellModel: U0 and C must be positive");
  if (l && !(*l > 0.5 * D))
    throw std::invalid_argument("DoubleWellModel: l must exceed D/2");
}

DoubleWellModel DoubleWellModel::custom(double kappa, double D, double d,
                                        const PhysParams& params,
                                        std::optional<double> l) {
  DoubleWellModel m;
  m.kappa = kappa;
  m.D = D;
  m.d = d;
  m.rho0 = 1.0 / (2.0 * kappa);  // the thread radius the curvature implies
  m.U0 = params.hbar * params.hbar * kappa * kappa / (8.0 * params.mass);
  m.C = kappa * D / 4.0;
  m.l = l;
  m.validate();
  return m;
}

DoubleWellModel DoubleWellModel::knot(double rho0, double d, const PhysParams& params,
                                      std::optional<double> l) {
  if (!(rho0 > 0.0)) throw std::invalid_argument("DoubleWellModel: rho0 must be positive");
  auto m = custom(1.0 / (2.0 * rho0), 5.0 * rho0, d, params, l);
  m.rho0 = rho0;
  return m;
}

DoubleWellModel DoubleWellModel::nano_bar(double R, double d, const PhysParams& params,
                                          std::optional<double> l) {
  if (!(R > 0.0)) throw std::invalid_argument("DoubleWellModel: radius must be positive");
  return custom(1.0 / R, std::numbers::pi * R / 2.0, d, params, l);
}

PotentialProfile effective_potential(const CurvatureProfile& profile,
                                     const PhysParams& params) {
  profile.validate();
  PotentialProfile out;
  out.representation = PotentialRep::PiecewiseLinear;
  out.breakpoints = profile.s;
  out.values.resize(profile.kappa.size());
  const double factor = params.kinetic_factor() / 4.0;
  for (std::size_t i = 0; i < profile.kappa.size(); ++i)
    out.values[i] = -factor * profile.kappa[i] * profile.kappa[i];
  out.domain_min = profile.s.front();
  out.domain_max = profile.s.back();
  out.boundary = BoundaryKind::Open;
  out.validate();
  return out;
}

PotentialProfile double_well_potential(const DoubleWellModel& model) {
  model.validate();
  const double half_d = 0.5 * model.d;
  const double outer = half_d + model.D;

  PotentialProfile out;
  out.representation = PotentialRep::PiecewiseConstant;
  if (model.d == 0.0) {
    out.breakpoints = {-outer, outer};  // merged single well of width 2D
    out.values = {-model.U0};
  } else {
    out.breakpoints = {-outer, -half_d, half_d, outer};
    out.values = {-model.U0, 0.0, -model.U0};
  }
  out.domain_min = -outer;
  out.domain_max = outer;

  if (model.l) {
    const double wall = half_d + *model.l;
    // Clip the wells if the walls cut into them.
    std::vector<double> b;
    std::vector<double> v;
    b.push_back(-wall);
    for (std::size_t j = 0; j + 1 < out.breakpoints.size(); ++j) {
      const double lo = std::max(out.breakpoints[j], -wall);
      const double hi = std::min(out.breakpoints[j + 1], wall);
      if (hi <= lo) continue;
      if (lo > b.back()) {
        v.push_back(0.0);
        b.push_back(lo);
      }
      v.push_back(out.values[j]);
      b.push_back(hi);
    }
    if (b.back() < wall) {
      v.push_back(0.0);
      b.push_back(wall);
    }
    out.breakpoints = std::move(b);
    out.values = std::move(v);
    out.domain_min = -wall;
    out.domain_max = wall;
    out.boundary = BoundaryKind::HardWall;
  }
  out.validate();
  return out;
}

PotentialProfile tilt_potential(const PotentialProfile& profile, double field,
                                const PhysParams& params) {
  PotentialProfile out = profile.to_piecewise_linear();
  for (std::size_t i = 0; i < out.breakpoints.size(); ++i)
    out.values[i] += params.charge * field * out.breakpoints[i];
  return out;
}

double critical_field(const DoubleWellModel& model, const PhysParams& params) {
  model.validate();
  const double h2k2 = params.hbar * params.hbar * model.kappa * model.kappa;
  return h2k2 * (1.0 + std::cos(0.5 * model.D * model.kappa)) /
         (4.0 * params.mass * params.charge * model.D);
}

double critical_field_bound(const DoubleWellModel& model, const PhysParams& params) {
  return params.hbar * params.hbar /
         (20.0 * params.mass * params.charge * model.rho0 * model.rho0);
}

double dipole_moment(const DoubleWellModel& model, const PhysParams& params) {
  model.validate();
  return params.charge * (model.d + model.D);
}

double max_temperature(const DoubleWellModel& model, const PhysParams& params) {
  model.validate();
  return model.U0 / params.boltzmann;
}

}  // namespace knotqubit
