#include "knotqubit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "knotqubit/tridiag.hpp"

namespace knotqubit {

namespace {

constexpr int kScanPoints = 10000;
constexpr double kBisectTol = 1e-13;
constexpr double kThresholdQSq = 1e-14;

// Bisection on a bracketing interval found by a sign-change scan.
double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int it = 0; it < 200 && b - a > kBisectTol; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

// Scans f on (lo, hi) with kScanPoints samples and bisects every sign change.
std::vector<double> scan_roots(const std::function<double(double)>& f, double lo,
                               double hi) {
  std::vector<double> roots;
  double prev_x = lo;
  double prev_f = f(lo);
  for (int i = 1; i <= kScanPoints; ++i) {
    const double x = lo + (hi - lo) * double(i) / kScanPoints;
    const double fx = f(x);
    if (std::isfinite(prev_f) && std::isfinite(fx) &&
        (prev_f <= 0.0) != (fx <= 0.0)) {
      roots.push_back(bisect(f, prev_x, x));
    }
    prev_x = x;
    prev_f = fx;
  }
  return roots;
}

Parity classify_overlap(double overlap) {
  if (overlap > 0.9) return Parity::Even;
  if (overlap < -0.9) return Parity::Odd;
  return Parity::None;
}

}  // namespace

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    default: return "none";
  }
}

bool Grid::is_symmetric(double tol) const {
  return std::abs(s_min + s_max) <= tol * (s_max - s_min);
}

void Grid::validate() const {
  if (n < 16) throw std::invalid_argument("Grid: at least 16 nodes required");
  if (!(s_max > s_min)) throw std::invalid_argument("Grid: s_max must exceed s_min");
}

Grid Grid::for_potential(const PotentialProfile& p, std::size_t n, double open_margin) {
  Grid g;
  if (p.boundary == BoundaryKind::HardWall) {
    g.s_min = p.domain_min;
    g.s_max = p.domain_max;
  } else {
    g.s_min = p.breakpoints.front() - open_margin;
    g.s_max = p.breakpoints.back() + open_margin;
  }
  g.n = n;
  g.validate();
  return g;
}

BoundState bound_state_from_energy(double energy, double v_min,
                                   const PhysParams& params) {
  BoundState st;
  st.energy = energy;
  const double two_m_over_h2 = 1.0 / params.kinetic_factor();
  if (energy < 0.0) {
    const double q_sq = -energy * two_m_over_h2;
    st.q = std::sqrt(q_sq);
    st.at_threshold = q_sq < kThresholdQSq;
  }
  st.k = std::sqrt(std::max(0.0, (energy - v_min) * two_m_over_h2));
  return st;
}

double single_well_even_residual(double x, double C) {
  return x * std::sin(x) - std::sqrt(std::max(0.0, C * C - x * x)) * std::cos(x);
}

double single_well_odd_residual(double x, double C) {
  return std::sqrt(std::max(0.0, C * C - x * x)) * std::sin(x) + x * std::cos(x);
}

std::vector<BoundState> solve_single_well(const DoubleWellModel& model,
                                          const PhysParams& params) {
  model.validate();
  const double C = model.C;
  const double k0 = model.k0();
  const double lo = C * 1e-9;
  const double hi = C * (1.0 - 1e-12);

  auto make_state = [&](double x, Parity parity) {
    const double k = 2.0 * x / model.D;
    const double ratio = x / C;  // k_n D / (2C)
    BoundState st = bound_state_from_energy(-model.U0 * (1.0 - ratio * ratio),
                                            -model.U0, params);
    st.k = k;
    st.q = std::sqrt(std::max(0.0, k0 * k0 - k * k));
    st.at_threshold = st.q * st.q < kThresholdQSq;
    st.parity = parity;
    return st;
  };

  std::vector<BoundState> states;
  for (double x : scan_roots([C](double x) { return single_well_even_residual(x, C); },
                             lo, hi))
    states.push_back(make_state(x, Parity::Even));
  for (double x : scan_roots([C](double x) { return single_well_odd_residual(x, C); },
                             lo, hi))
    states.push_back(make_state(x, Parity::Odd));
  std::sort(states.begin(), states.end(),
            [](const BoundState& a, const BoundState& b) { return a.energy < b.energy; });
  return states;
}

std::vector<BoundState> solve_hard_wall(const DoubleWellModel& model,
                                        const PhysParams& params) {
  model.validate();
  if (!model.l) throw std::invalid_argument("solve_hard_wall: model has no wall distance l");
  const double l = *model.l;
  const double D = model.D;
  const double k0 = model.k0();

  // All branches of the boxed-well quantization written pole-free in q:
  //   k D = n pi - atan((k/q) tanh(q(l + D/2))) - atan((k/q) tanh(q(l - D/2)))
  // Odd n are the even (+) states, even n the odd (-) states; the atan
  // identity atan(u) + atan(1/u) = pi/2 maps them onto the printed coth and
  // tanh forms.
  auto residual = [&](double q, int branch) {
    const double k = std::sqrt(std::max(0.0, k0 * k0 - q * q));
    const double phase = std::atan2(k * std::tanh(q * (l + 0.5 * D)), q) +
                         std::atan2(k * std::tanh(q * (l - 0.5 * D)), q);
    return k * D - double(branch) * std::numbers::pi + phase;
  };

  const int max_branch = int(std::ceil(k0 * D / std::numbers::pi)) + 1;
  std::vector<BoundState> states;
  for (int branch = 1; branch <= max_branch; ++branch) {
    const auto roots = scan_roots(
        [&](double q) { return residual(q, branch); }, k0 * 1e-9, k0 * (1.0 - 1e-12));
    for (double q : roots) {
      BoundState st = bound_state_from_energy(-params.kinetic_factor() * q * q,
                                              -model.U0, params);
      st.q = q;
      st.k = std::sqrt(std::max(0.0, k0 * k0 - q * q));
      st.at_threshold = q * q < kThresholdQSq;
      st.parity = (branch % 2 == 1) ? Parity::Even : Parity::Odd;
      states.push_back(st);
    }
  }
  std::sort(states.begin(), states.end(),
            [](const BoundState& a, const BoundState& b) { return a.energy < b.energy; });
  return states;
}

PotentialProfile hard_wall_single_well_potential(const DoubleWellModel& model) {
  model.validate();
  if (!model.l) throw std::invalid_argument("hard_wall_single_well_potential: no l");
  const double l = *model.l;
  PotentialProfile p;
  p.representation = PotentialRep::PiecewiseConstant;
  p.breakpoints = {-(l + model.D), -0.5 * model.D, 0.5 * model.D, l};
  p.values = {0.0, -model.U0, 0.0};
  p.domain_min = -(l + model.D);
  p.domain_max = l;
  p.boundary = BoundaryKind::HardWall;
  p.validate();
  return p;
}

std::vector<BoundState> numeric_spectrum(const PotentialProfile& potential,
                                         const Grid& grid, std::size_t n_states,
                                         const PhysParams& params) {
  potential.validate();
  grid.validate();
  if (n_states == 0) return {};

  const double h = grid.spacing();
  if (potential.boundary == BoundaryKind::HardWall) {
    const double tol = 1e-9 * (grid.s_max - grid.s_min);
    if (std::abs(grid.s_min - potential.domain_min) > tol ||
        std::abs(grid.s_max - potential.domain_max) > tol)
      throw std::invalid_argument("numeric_spectrum: grid must match the hard walls");
  } else {
    if (grid.s_min > potential.breakpoints.front() ||
        grid.s_max < potential.breakpoints.back())
      throw std::invalid_argument("numeric_spectrum: grid does not cover the potential");
  }

  // Shortest feature check: breakpoint gaps below 1e-7 of the span encode
  // jumps, not features to resolve.
  const double span = potential.breakpoints.back() - potential.breakpoints.front();
  double feature = span;
  for (std::size_t i = 1; i < potential.breakpoints.size(); ++i) {
    const double gap = potential.breakpoints[i] - potential.breakpoints[i - 1];
    if (gap > 1e-7 * span) feature = std::min(feature, gap);
  }
  if (feature / h < 8.0)
    throw std::invalid_argument("numeric_spectrum: grid too coarse for the shortest feature");

  // Interior nodes only; psi = 0 at both grid ends.
  const std::size_t m = grid.n - 2;
  const double kin = params.kinetic_factor();
  std::vector<double> diag(m), off(m - 1, -kin / (h * h));
  for (std::size_t i = 0; i < m; ++i)
    diag[i] = 2.0 * kin / (h * h) + potential.value_at(grid.node(i + 1));

  const auto eig = lowest_eigenpairs(diag, off, n_states);

  const bool symmetric = grid.is_symmetric() && potential.is_even();
  const double v_min = potential.min_value();

  std::vector<BoundState> states;
  states.reserve(eig.values.size());
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    BoundState st = bound_state_from_energy(eig.values[k], v_min, params);
    st.psi.assign(grid.n, 0.0);
    for (std::size_t i = 0; i < m; ++i) st.psi[i + 1] = eig.vectors[k][i];

    // Trapezoidal L2 normalization (the boundary values are zero).
    double nrm = 0.0;
    for (double v : st.psi) nrm += v * v;
    nrm = std::sqrt(nrm * h);
    for (double& v : st.psi) v /= nrm;

    // Sign convention: first extremum of significant magnitude is positive.
    double peak = 0.0;
    for (double v : st.psi) peak = std::max(peak, std::abs(v));
    for (double v : st.psi) {
      if (std::abs(v) > 0.5 * peak) {
        if (v < 0.0)
          for (double& w : st.psi) w = -w;
        break;
      }
    }

    if (symmetric) {
      double overlap = 0.0;
      for (std::size_t i = 0; i < grid.n; ++i)
        overlap += st.psi[i] * st.psi[grid.n - 1 - i];
      st.parity = classify_overlap(overlap * h);
    }
    states.push_back(std::move(st));
  }
  return states;
}

}  // namespace knotqubit
