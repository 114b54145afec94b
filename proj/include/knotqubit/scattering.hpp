#ifndef KNOTQUBIT_SCATTERING_HPP
#define KNOTQUBIT_SCATTERING_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "knotqubit/phys_params.hpp"
#include "knotqubit/potential.hpp"

namespace knotqubit {

// One point of a transmission sweep: incident wave number q (E = (hbar^2/2m) q^2)
// and the transmitted/incident current ratio T = j_t / j_i.
struct TransmissionPoint {
  double q = 0.0;
  double T = 0.0;
};

// Transmission and reflection amplitudes for a plane wave incident from the
// left.  For equal asymptotic potentials (V = 0 both sides here) the flux
// factors cancel and T = |t|^2, R = |r|^2 with T + R = 1.
struct ScatteringAmplitudes {
  std::complex<double> t{};
  std::complex<double> r{};
  double T = 0.0;
  double R = 0.0;
};

// 2x2 complex transfer matrix through a piecewise-constant potential, value
// and derivative matched at every breakpoint.  Region wave numbers are
// sqrt(q^2 - 2mV_j/hbar^2), evanescent regions get the Im >= 0 branch.
// Matrices are renormalized by their largest entry with the scale tracked
// separately, so wide classically forbidden regions cannot overflow.
// q^2 within 1e-14 of a region threshold is nudged by 1e-12.
// Throws for q <= 0 or a non-piecewise-constant profile.
ScatteringAmplitudes scattering_amplitudes(double q, const PotentialProfile& potential,
                                           const PhysParams& params = PhysParams::natural());

TransmissionPoint transmission(double q, const PotentialProfile& potential,
                               const PhysParams& params = PhysParams::natural());

// Evaluates transmission on n uniformly spaced q in [q_min, q_max].
std::vector<TransmissionPoint> transmission_sweep(
    double q_min, double q_max, std::size_t n, const PotentialProfile& potential,
    const PhysParams& params = PhysParams::natural());

// Wave numbers of the transparency resonances: strict local maxima of the
// sweep within a 5-sample window with T >= threshold.  When an evaluator
// T(q) is supplied each peak is refined by golden-section maximization to
// delta q <= 1e-4, otherwise by parabolic interpolation of the samples.
// A flat T = 1 plateau yields no resonances.  Throws on an empty sweep.
std::vector<double> find_resonances(
    const std::vector<TransmissionPoint>& sweep, double threshold = 0.999,
    const std::function<double(double)>& evaluate = {});

}  // namespace knotqubit

#endif  // KNOTQUBIT_SCATTERING_HPP
