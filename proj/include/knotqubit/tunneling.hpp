#ifndef KNOTQUBIT_TUNNELING_HPP
#define KNOTQUBIT_TUNNELING_HPP

#include <string>
#include <utility>
#include <vector>

#include "knotqubit/phys_params.hpp"
#include "knotqubit/potential.hpp"
#include "knotqubit/spectrum.hpp"

namespace knotqubit {

enum class SplitMethod { Wkb, Numeric };

std::string to_string(SplitMethod m);

// Tunnel splitting of the double-well ground doublet.  Sign convention: the
// even (symmetric) state is the lower level, deltaE = E_odd - E_even > 0.
struct SplitResult {
  double deltaE = 0.0;     // E_odd - E_even
  double omega_cl = 0.0;   // classical in-well frequency Omega = pi hbar |k1| / (m D)
  double omega_res = 0.0;  // resonance frequency deltaE / hbar, exactly
  double p1 = 0.0;         // barrier momentum scale hbar |k1|
  SplitMethod method = SplitMethod::Wkb;
};

// Quasi-classical splitting with k1 the ground even root of the single well:
//   deltaE = (hbar^2 |k1| / m D) exp(-|k1| d).
// The printed formula carries |k1| in the exponent; the decay constant
// q1 = sqrt(k0^2 - k1^2) is the textbook alternative for a barrier at V = 0.
// barrier_exponent_q() reports that variant for diagnostics.
SplitResult wkb_split(const DoubleWellModel& model, double k1,
                      const PhysParams& params = PhysParams::natural());

double wkb_barrier_exponent_q(const DoubleWellModel& model, double k1,
                              const PhysParams& params = PhysParams::natural());

// Splitting from the two lowest finite-difference eigenvalues of the
// symmetric double well.  Throws if no bound level exists (ground energy
// >= 0); the odd partner may be a box-confined quasi-stationary level when
// the barrier is too thin to bind it.  omega_cl is reported from the WKB
// formula with k1 taken from the numeric ground energy.
SplitResult numeric_split(const PotentialProfile& potential, const Grid& grid,
                          const PhysParams& params = PhysParams::natural());

// Symmetric/antisymmetric combinations psi+-(s) = [psi(s) +- psi(-s)]/sqrt(2),
// renormalized.  The grid must be symmetric about 0; an (anti)symmetric input
// whose counterpart combination vanishes is rejected as degenerate.
std::pair<std::vector<double>, std::vector<double>> symmetrize(
    const std::vector<double>& psi, const Grid& grid);

}  // namespace knotqubit

#endif  // KNOTQUBIT_TUNNELING_HPP
