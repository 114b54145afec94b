#include "knotqubit/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace knotqubit {

namespace {

using complexd = std::complex<double>;

struct Amplitudes {
  complexd aL, aR;

  Amplitudes operator+(const Amplitudes& o) const { return {aL + o.aL, aR + o.aR}; }
  Amplitudes operator*(double a) const { return {a * aL, a * aR}; }
};

// Trapezoidal populations below/above the split point, the straddling cell
// split by linear interpolation of |psi|^2.
template <typename Density>
std::pair<double, double> split_integral(const Density& rho, const Grid& grid,
                                         double split_point) {
  const double h = grid.spacing();
  double left = 0.0, right = 0.0;
  for (std::size_t i = 0; i + 1 < grid.n; ++i) {
    const double a = grid.node(i), b = grid.node(i + 1);
    const double ra = rho(i), rb = rho(i + 1);
    const double cell = 0.5 * (ra + rb) * h;
    if (b <= split_point) {
      left += cell;
    } else if (a >= split_point) {
      right += cell;
    } else {
      // Straddling cell: split at the interpolated density, which keeps
      // left + right equal to the plain trapezoid cell exactly.
      const double w = (split_point - a) / h;
      const double rs = ra * (1.0 - w) + rb * w;
      left += 0.5 * (ra + rs) * (split_point - a);
      right += 0.5 * (rs + rb) * (b - split_point);
    }
  }
  return {left, right};
}

}  // namespace

TwoLevelState TwoLevelState::superposition() {
  const double a = 1.0 / std::numbers::sqrt2;
  return {a, a};
}

void DriveSpec::validate() const {
  if (amp < 0.0) throw std::invalid_argument("DriveSpec: amp must be >= 0");
  if (freq < 0.0) throw std::invalid_argument("DriveSpec: freq must be >= 0");
}

std::vector<TlsSample> tls_evolve(double deltaE, const DriveSpec& drive,
                                  const TwoLevelState& initial, double t_end,
                                  double dt, const PhysParams& params) {
  drive.validate();
  if (!(dt > 0.0) || !(t_end > 0.0))
    throw std::invalid_argument("tls_evolve: dt and t_end must be positive");
  double dt_max = 0.01 * 2.0 * std::numbers::pi * params.hbar / std::abs(deltaE);
  if (drive.freq > 0.0)
    dt_max = std::min(dt_max, 0.01 * 2.0 * std::numbers::pi / drive.freq);
  if (dt > dt_max) throw std::invalid_argument("tls_evolve: dt too large for this drive");

  const double inv_hbar = 1.0 / params.hbar;
  auto deriv = [&](double t, const Amplitudes& a) {
    const double eps = drive.bias0 + drive.amp * std::sin(drive.freq * t + drive.phase);
    const complexd minus_i{0.0, -1.0};
    // H = [[+eps/2, -deltaE/2], [-deltaE/2, -eps/2]]
    const complexd hL = 0.5 * eps * a.aL - 0.5 * deltaE * a.aR;
    const complexd hR = -0.5 * deltaE * a.aL - 0.5 * eps * a.aR;
    return Amplitudes{minus_i * inv_hbar * hL, minus_i * inv_hbar * hR};
  };

  const std::size_t steps = std::size_t(std::ceil(t_end / dt - 1e-12));
  std::vector<TlsSample> trajectory;
  trajectory.reserve(steps + 1);
  Amplitudes a{initial.aL, initial.aR};
  trajectory.push_back({0.0, {a.aL, a.aR}});
  for (std::size_t step = 0; step < steps; ++step) {
    const double t = double(step) * dt;
    const Amplitudes k1 = deriv(t, a);
    const Amplitudes k2 = deriv(t + 0.5 * dt, a + k1 * (0.5 * dt));
    const Amplitudes k3 = deriv(t + 0.5 * dt, a + k2 * (0.5 * dt));
    const Amplitudes k4 = deriv(t + dt, a + k3 * dt);
    a = a + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
    trajectory.push_back({double(step + 1) * dt, {a.aL, a.aR}});
  }
  return trajectory;
}

TwoLevelState prepare_and_release(const DoubleWellModel& model, double field,
                                  const PhysParams& params) {
  const double field_max = critical_field(model, params);
  if (std::abs(field) > field_max)
    throw std::domain_error("prepare_and_release: field exceeds the critical value, "
                            "the bound level is destroyed");
  if (field > 0.0) return TwoLevelState::right();
  if (field < 0.0) return TwoLevelState::left();
  return TwoLevelState::superposition();
}

std::vector<WavepacketSample> cn_evolve(const PotentialProfile& potential,
                                        const std::vector<complexd>& psi0,
                                        const Grid& grid, double dt, std::size_t steps,
                                        const PhysParams& params) {
  potential.validate();
  grid.validate();
  if (psi0.size() != grid.n)
    throw std::invalid_argument("cn_evolve: psi0 size does not match the grid");
  if (!(dt > 0.0)) throw std::invalid_argument("cn_evolve: dt must be positive");
  if (dt * potential.max_abs_value() > 0.1 * params.hbar)
    throw std::invalid_argument("cn_evolve: dt too large for this potential");

  const double h = grid.spacing();
  auto norm_of = [&](const std::vector<complexd>& psi) {
    double nrm = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const double w = (i == 0 || i + 1 == psi.size()) ? 0.5 : 1.0;
      nrm += w * std::norm(psi[i]);
    }
    return nrm * h;
  };
  if (std::abs(norm_of(psi0) - 1.0) > 1e-6)
    throw std::invalid_argument("cn_evolve: psi0 must be L2-normalized on the grid");

  // Crank-Nicolson: (1 + i dt H / 2 hbar) psi' = (1 - i dt H / 2 hbar) psi,
  // interior nodes only (psi = 0 at both ends).
  const std::size_t m = grid.n - 2;
  const double kin = params.kinetic_factor();
  const complexd i_unit{0.0, 1.0};
  const complexd alpha = i_unit * dt / (2.0 * params.hbar);

  const complexd off_h = -kin / (h * h);
  std::vector<complexd> diag_h(m);
  for (std::size_t j = 0; j < m; ++j)
    diag_h[j] = 2.0 * kin / (h * h) + potential.value_at(grid.node(j + 1));

  // Cached Thomas factorization of A = 1 + alpha H (diagonally dominant).
  const complexd a_off = alpha * off_h;
  std::vector<complexd> denom(m), c_prime(m - 1);
  denom[0] = 1.0 + alpha * diag_h[0];
  c_prime[0] = a_off / denom[0];
  for (std::size_t j = 1; j < m; ++j) {
    denom[j] = 1.0 + alpha * diag_h[j] - a_off * c_prime[j - 1];
    if (j + 1 < m) c_prime[j] = a_off / denom[j];
  }

  std::vector<complexd> psi(psi0.begin() + 1, psi0.end() - 1);
  std::vector<complexd> rhs(m), solved(m);
  std::vector<complexd> full(grid.n, complexd{0.0, 0.0});

  auto record = [&](double t, std::vector<WavepacketSample>& out) {
    for (std::size_t j = 0; j < m; ++j) full[j + 1] = psi[j];
    const auto [pl, pr] =
        split_integral([&](std::size_t i) { return std::norm(full[i]); }, grid, 0.0);
    out.push_back({t, pl, pr, norm_of(full)});
  };

  std::vector<WavepacketSample> trajectory;
  trajectory.reserve(steps + 1);
  record(0.0, trajectory);
  for (std::size_t step = 0; step < steps; ++step) {
    // rhs = (1 - alpha H) psi
    for (std::size_t j = 0; j < m; ++j) {
      complexd hv = diag_h[j] * psi[j];
      if (j > 0) hv += off_h * psi[j - 1];
      if (j + 1 < m) hv += off_h * psi[j + 1];
      rhs[j] = psi[j] - alpha * hv;
    }
    // Thomas solve with the cached factorization.
    solved[0] = rhs[0] / denom[0];
    for (std::size_t j = 1; j < m; ++j)
      solved[j] = (rhs[j] - a_off * solved[j - 1]) / denom[j];
    for (std::size_t j = m - 1; j-- > 0;)
      solved[j] -= c_prime[j] * solved[j + 1];
    psi.swap(solved);
    record(double(step + 1) * dt, trajectory);
  }
  return trajectory;
}

std::pair<double, double> well_population(const std::vector<double>& psi,
                                          const Grid& grid, double split_point) {
  if (psi.size() != grid.n)
    throw std::invalid_argument("well_population: psi size does not match the grid");
  return split_integral([&](std::size_t i) { return psi[i] * psi[i]; }, grid,
                        split_point);
}

std::pair<double, double> well_population(const std::vector<complexd>& psi,
                                          const Grid& grid, double split_point) {
  if (psi.size() != grid.n)
    throw std::invalid_argument("well_population: psi size does not match the grid");
  return split_integral([&](std::size_t i) { return std::norm(psi[i]); }, grid,
                        split_point);
}

}  // namespace knotqubit
