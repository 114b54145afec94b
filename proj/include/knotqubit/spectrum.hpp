#ifndef KNOTQUBIT_SPECTRUM_HPP
#define KNOTQUBIT_SPECTRUM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "knotqubit/phys_params.hpp"
#include "knotqubit/potential.hpp"

namespace knotqubit {

enum class Parity { Even, Odd, None };

std::string to_string(Parity p);

// One stationary state.  For negative-energy states q is the outside decay
// constant, E = -(hbar^2/2m) q^2, and k the inside wave number with
// k^2 = k0^2 - q^2 for the square-well models.  psi, when filled, is the
// L2-normalized wavefunction sampled on the solver grid.
struct BoundState {
  double k = 0.0;
  double q = 0.0;
  double energy = 0.0;
  Parity parity = Parity::None;
  bool at_threshold = false;  // root with q^2 < 1e-14 (state at E = 0)
  std::vector<double> psi;

  bool has_psi() const { return !psi.empty(); }
};

// Uniform solver grid with n nodes on [s_min, s_max].
struct Grid {
  double s_min = 0.0;
  double s_max = 0.0;
  std::size_t n = 0;

  double spacing() const { return (s_max - s_min) / double(n - 1); }
  double node(std::size_t i) const { return s_min + double(i) * spacing(); }
  bool is_symmetric(double tol = 1e-9) const;

  void validate() const;  // n >= 16, s_max > s_min

  // Grid matching a hard-wall potential's exact wall positions, or covering
  // an open potential with the given margin beyond its breakpoints.
  static Grid for_potential(const PotentialProfile& p, std::size_t n,
                            double open_margin = 0.0);
};

// Builds a BoundState (k, q, energy, threshold flag) from an energy and the
// potential floor v_min; k = sqrt(2m(E - v_min))/hbar.
BoundState bound_state_from_energy(double energy, double v_min,
                                   const PhysParams& params);

// Residuals of the single-well quantization conditions in x = kD/2 on (0, C):
//   even: tan x = sqrt(C^2 - x^2) / x,   odd: tan x = -x / sqrt(C^2 - x^2).
// Written pole-free as x sin x - sqrt(C^2-x^2) cos x and
// sqrt(C^2-x^2) sin x + x cos x; roots coincide with the tan forms.
double single_well_even_residual(double x, double C);
double single_well_odd_residual(double x, double C);

// All bound states of the isolated well of width D: roots of the even/odd
// conditions above, bracketed by a 1e4-point sign scan and bisected to 1e-13.
// Each root is converted to k = 2x/D, q = sqrt(k0^2 - k^2) and
// E_n = -U0 [1 - (k_n D / 2C)^2].  At least one even state always exists.
std::vector<BoundState> solve_single_well(const DoubleWellModel& model,
                                          const PhysParams& params = PhysParams::natural());

// Finite wire: the well of width D with hard walls whose gaps to the well
// edges are l + D/2 and l - D/2 (the wire spans [-(l+D), l] around the well
// at [-D/2, D/2]).  Solves
//   k D = sum_eps tan^-1 { +-[(q/k) coth(q(l + (-1)^eps D/2))]^(+-1) }
// over all admissible branches, + for even and - for odd states; returns the
// negative-energy spectrum.  Requires model.l > D/2.  For l >> D this reduces
// to the isolated-well conditions.
std::vector<BoundState> solve_hard_wall(const DoubleWellModel& model,
                                        const PhysParams& params = PhysParams::natural());

// The walled-wire potential that solve_hard_wall quantizes, for numeric
// cross-checks: well [-D/2, D/2] of depth -U0, hard walls at -(l+D) and +l.
PotentialProfile hard_wall_single_well_potential(const DoubleWellModel& model);

// Finite-difference eigensolver: discretizes -(hbar^2/2m) psi'' + V psi with
// the 3-point Laplacian and zero boundary values, and returns the n_states
// lowest eigenpairs of the symmetric tridiagonal system, L2-normalized, with
// parity classified by the overlap <psi(s) psi(-s)> when the grid and
// potential are symmetric (|overlap| > 0.9, otherwise Parity::None).
//
// The grid must cover the potential (hard-wall profiles require the exact
// wall positions) and resolve the shortest feature with >= 8 nodes; gaps
// below 1e-7 of the span count as jumps, not features.
std::vector<BoundState> numeric_spectrum(const PotentialProfile& potential,
                                         const Grid& grid, std::size_t n_states,
                                         const PhysParams& params = PhysParams::natural());

}  // namespace knotqubit

#endif  // KNOTQUBIT_SPECTRUM_HPP
