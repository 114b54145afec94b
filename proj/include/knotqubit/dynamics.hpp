#ifndef KNOTQUBIT_DYNAMICS_HPP
#define KNOTQUBIT_DYNAMICS_HPP

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "knotqubit/phys_params.hpp"
#include "knotqubit/potential.hpp"
#include "knotqubit/spectrum.hpp"

namespace knotqubit {

// Two-level amplitudes on the localized basis |L> = (1,0), |R> = (0,1).
struct TwoLevelState {
  std::complex<double> aL{};
  std::complex<double> aR{};

  double norm_sq() const { return std::norm(aL) + std::norm(aR); }

  static TwoLevelState left() { return {1.0, 0.0}; }
  static TwoLevelState right() { return {0.0, 1.0}; }
  static TwoLevelState superposition();  // (|L> + |R>)/sqrt(2)
};

// Bias drive eps(t) = bias0 + amp * sin(freq * t + phase), coupled through
// sigma_z in the localized basis (energy units; amp = mu * field amplitude).
struct DriveSpec {
  double bias0 = 0.0;
  double amp = 0.0;
  double freq = 0.0;
  double phase = 0.0;

  void validate() const;  // amp >= 0, freq >= 0
};

struct TlsSample {
  double t = 0.0;
  TwoLevelState state;
};

// Integrates i hbar d/dt (aL, aR) = H(t) (aL, aR) with
//   H = [[ +eps(t)/2, -deltaE/2 ], [ -deltaE/2, -eps(t)/2 ]]
// by classical 4th-order Runge-Kutta.  No renormalization is applied; norm
// drift is a diagnostic of the stepping error.  Requires
// dt <= 0.01 * min(2 pi hbar / deltaE, 2 pi / freq).
std::vector<TlsSample> tls_evolve(double deltaE, const DriveSpec& drive,
                                  const TwoLevelState& initial, double t_end,
                                  double dt,
                                  const PhysParams& params = PhysParams::natural());

// Initial condition of the sudden-switch-off protocol: a longitudinal field
// within the critical value parks a negatively charged carrier in |R> (field
// > 0) or |L> (field < 0); zero field leaves the equal superposition.
// Throws if |field| exceeds critical_field(model).
TwoLevelState prepare_and_release(const DoubleWellModel& model, double field,
                                  const PhysParams& params = PhysParams::natural());

struct WavepacketSample {
  double t = 0.0;
  double p_left = 0.0;
  double p_right = 0.0;
  double norm = 0.0;
};

// Crank-Nicolson propagation of the 1D Schroedinger equation on the grid
// (unconditionally stable, unitary to round-off).  Records t, the well
// populations P_L = integral_{s<0} |psi|^2, P_R and the norm every step.
// psi0 must be L2-normalized on the grid; requires dt * max|V| <= 0.1 hbar.
std::vector<WavepacketSample> cn_evolve(const PotentialProfile& potential,
                                        const std::vector<std::complex<double>>& psi0,
                                        const Grid& grid, double dt, std::size_t steps,
                                        const PhysParams& params = PhysParams::natural());

// Trapezoidal populations left/right of split_point; P_L + P_R equals the
// norm of psi by construction.
std::pair<double, double> well_population(const std::vector<double>& psi,
                                          const Grid& grid, double split_point = 0.0);
std::pair<double, double> well_population(const std::vector<std::complex<double>>& psi,
                                          const Grid& grid, double split_point = 0.0);

}  // namespace knotqubit

#endif  // KNOTQUBIT_DYNAMICS_HPP
