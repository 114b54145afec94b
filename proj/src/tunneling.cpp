#include "knotqubit/tunneling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace knotqubit {

std::string to_string(SplitMethod m) {
  return m == SplitMethod::Wkb ? "wkb" : "numeric";
}

SplitResult wkb_split(const DoubleWellModel& model, double k1, const PhysParams& params) {
  model.validate();
  const double ak1 = std::abs(k1);
  SplitResult r;
  r.method = SplitMethod::Wkb;
  r.p1 = params.hbar * ak1;
  r.omega_cl = std::numbers::pi * params.hbar * ak1 / (params.mass * model.D);
  r.deltaE = params.hbar * params.hbar * ak1 / (params.mass * model.D) *
             std::exp(-ak1 * model.d);
  r.omega_res = r.deltaE / params.hbar;
  return r;
}

double wkb_barrier_exponent_q(const DoubleWellModel& model, double k1,
                              const PhysParams&) {
  const double k0 = model.k0();
  const double q1 = std::sqrt(std::max(0.0, k0 * k0 - k1 * k1));
  return q1 * model.d;
}

SplitResult numeric_split(const PotentialProfile& potential, const Grid& grid,
                          const PhysParams& params) {
  if (!potential.is_even())
    throw std::invalid_argument("numeric_split: potential must be a symmetric double well");
  const auto states = numeric_spectrum(potential, grid, 2, params);
  if (states.size() < 2 || states[0].energy >= 0.0)
    throw std::domain_error("numeric_split: no bound doublet in this potential");

  // Well geometry off the piecewise structure: D = width of the first region
  // at the potential floor, k1 from the ground energy above that floor.
  const double v_min = potential.min_value();
  double well_width = potential.breakpoints.back() - potential.breakpoints.front();
  if (potential.representation == PotentialRep::PiecewiseConstant) {
    for (std::size_t j = 0; j < potential.values.size(); ++j) {
      if (potential.values[j] == v_min) {
        well_width = potential.breakpoints[j + 1] - potential.breakpoints[j];
        break;
      }
    }
  }
  const double k1 = states[0].k;

  SplitResult r;
  r.method = SplitMethod::Numeric;
  r.deltaE = states[1].energy - states[0].energy;
  r.omega_res = r.deltaE / params.hbar;
  r.p1 = params.hbar * k1;
  r.omega_cl = std::numbers::pi * params.hbar * k1 / (params.mass * well_width);
  return r;
}

std::pair<std::vector<double>, std::vector<double>> symmetrize(
    const std::vector<double>& psi, const Grid& grid) {
  grid.validate();
  if (psi.size() != grid.n)
    throw std::invalid_argument("symmetrize: psi size does not match the grid");
  if (!grid.is_symmetric())
    throw std::invalid_argument("symmetrize: grid must be symmetric about 0");

  const std::size_t n = grid.n;
  const double h = grid.spacing();
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  std::vector<double> plus(n), minus(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mirrored = psi[n - 1 - i];
    plus[i] = (psi[i] + mirrored) * inv_sqrt2;
    minus[i] = (psi[i] - mirrored) * inv_sqrt2;
  }

  auto normalize = [&](std::vector<double>& v, const char* which) {
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
      nrm += w * v[i] * v[i];
    }
    nrm *= h;
    if (nrm < 1e-12)
      throw std::domain_error(std::string("symmetrize: ") + which +
                              " combination vanishes (input already has definite parity)");
    const double scale = 1.0 / std::sqrt(nrm);
    for (double& w : v) w *= scale;
  };
  normalize(plus, "symmetric");
  normalize(minus, "antisymmetric");
  return {std::move(plus), std::move(minus)};
}

}  // namespace knotqubit
