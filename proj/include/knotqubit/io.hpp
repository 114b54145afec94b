#ifndef KNOTQUBIT_IO_HPP
#define KNOTQUBIT_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotqubit/dynamics.hpp"
#include "knotqubit/geometry.hpp"
#include "knotqubit/potential.hpp"
#include "knotqubit/scattering.hpp"
#include "knotqubit/spectrum.hpp"
#include "knotqubit/tunneling.hpp"

namespace knotqubit::io {

// Parse failure with "file:line: message" formatting.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// CSV files are UTF-8 with LF line endings and a header row; numbers are
// written with round-trip (%.17g) precision.

// Curves: header "x,y,z".
SpaceCurve read_curve_csv(const std::filesystem::path& path, bool closed);
void write_curve_csv(const std::filesystem::path& path, const SpaceCurve& curve);

// Curvature profiles: header "s,kappa"; the reader rejects non-monotone s.
CurvatureProfile read_profile_csv(const std::filesystem::path& path, bool closed,
                                  double period = 0.0);
void write_profile_csv(const std::filesystem::path& path, const CurvatureProfile& profile);

// Nano-bar segment lists: header "kind,length,radius" with kind one of
// "straight" or "arc"; the radius field may be empty for straight rods.
std::vector<PiecewiseSegment> read_segments_csv(const std::filesystem::path& path);

// Potentials: CSV "s,V" (piecewise-linear nodes) or JSON
// {breakpoints, values, representation, boundary, domain}.
void write_potential_csv(const std::filesystem::path& path, const PotentialProfile& p);
PotentialProfile read_potential_json(const std::filesystem::path& path);
void write_potential_json(const std::filesystem::path& path, const PotentialProfile& p);

// Spectra: JSON list of {k, q, energy, parity}; wavefunctions CSV "s,psi".
std::string spectrum_to_json(const std::vector<BoundState>& states);
void write_spectrum_json(const std::filesystem::path& path,
                         const std::vector<BoundState>& states);
void write_wavefunction_csv(const std::filesystem::path& path, const Grid& grid,
                            const std::vector<double>& psi);

// Splits: JSON {deltaE, omega_cl, omega_res, method}.
std::string split_to_json(const SplitResult& r);
void write_split_json(const std::filesystem::path& path, const SplitResult& r);

// Transmission sweeps: CSV "q,T"; resonances: JSON list.
void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<TransmissionPoint>& sweep);
void write_resonances_json(const std::filesystem::path& path,
                           const std::vector<double>& resonances);

// Trajectories: CSV "t,P_L,P_R,norm" for wavepackets and
// "t,reP_aL,imP_aL,reP_aR,imP_aR" for two-level runs.
void write_wavepacket_csv(const std::filesystem::path& path,
                          const std::vector<WavepacketSample>& samples);
void write_tls_csv(const std::filesystem::path& path,
                   const std::vector<TlsSample>& samples);

// Full round-trip decimal formatting used by every writer.
std::string format_double(double v);

}  // namespace knotqubit::io

#endif  // KNOTQUBIT_IO_HPP
