#ifndef KNOTQUBIT_POTENTIAL_HPP
#define KNOTQUBIT_POTENTIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "knotqubit/geometry.hpp"
#include "knotqubit/phys_params.hpp"

namespace knotqubit {

enum class PotentialRep { PiecewiseConstant, PiecewiseLinear };
enum class BoundaryKind { Open, HardWall };

// A one-dimensional potential V(s).
//
// PiecewiseConstant: breakpoints are the N+1 region edges and values[i] holds
// on [breakpoints[i], breakpoints[i+1]); V = 0 outside the edge span.
// PiecewiseLinear: values are node values at the breakpoints, interpolated
// linearly; V = 0 outside the node span.
//
// With HardWall boundaries the wavefunction vanishes at domain_min/domain_max.
struct PotentialProfile {
  PotentialRep representation = PotentialRep::PiecewiseConstant;
  std::vector<double> breakpoints;
  std::vector<double> values;
  double domain_min = 0.0;
  double domain_max = 0.0;
  BoundaryKind boundary = BoundaryKind::Open;

  void validate() const;
  double value_at(double s) const;

  // Piecewise-constant profiles are converted by emitting node pairs that
  // straddle each value jump at +-eps/2 (eps = 1e-9 of the span).
  PotentialProfile to_piecewise_linear() const;

  // Mirror image s -> -s.
  PotentialProfile mirrored() const;

  // True if V(s) matches V(-s) at mirrored probe points within tol.
  bool is_even(double tol = 1e-9) const;

  double min_value() const;
  double max_abs_value() const;
};

// The idealized knot double well: two wells of depth U0 and width D separated
// by a barrier of width d, symmetric about s = 0.  Geometry fixes everything:
// U0 = hbar^2 kappa^2 / 8m, C = kappa D / 4, k0 = kappa / 2; for a knot tied
// tight on a thread of radius rho0, kappa = 1/(2 rho0) and D = 5 rho0, which
// gives C = 5/8.  Optional hard walls sit at +-(d/2 + l).
struct DoubleWellModel {
  double rho0 = 0.0;
  double kappa = 0.0;
  double D = 0.0;
  double d = 0.0;
  double U0 = 0.0;
  double C = 0.0;
  std::optional<double> l;

  double k0() const { return 0.5 * kappa; }

  void validate() const;

  static DoubleWellModel knot(double rho0, double d,
                              const PhysParams& params = PhysParams::natural(),
                              std::optional<double> l = std::nullopt);

  static DoubleWellModel custom(double kappa, double D, double d,
                                const PhysParams& params = PhysParams::natural(),
                                std::optional<double> l = std::nullopt);

  // Bent nano-bar device: a quarter-circle arc of radius R acts as a well of
  // width D = pi R / 2 with kappa = 1/R.
  static DoubleWellModel nano_bar(double R, double d,
                                  const PhysParams& params = PhysParams::natural(),
                                  std::optional<double> l = std::nullopt);
};

// Curvature-induced potential V(s) = -(hbar^2/2m) kappa(s)^2 / 4 on the
// profile's own s grid (piecewise-linear nodes, open boundaries).
PotentialProfile effective_potential(const CurvatureProfile& profile,
                                     const PhysParams& params = PhysParams::natural());

// The model double well as a piecewise-constant profile.  With l set, the
// profile is clipped by hard walls at +-(d/2 + l).
PotentialProfile double_well_potential(const DoubleWellModel& model);

// Adds the linear ramp charge*field*s (zero at s = 0) to the node values.
// The ramp spans the represented node range only; outside it V stays 0.
PotentialProfile tilt_potential(const PotentialProfile& profile, double field,
                                const PhysParams& params = PhysParams::natural());

// Largest longitudinal field that does not destroy the bound level:
// E_max = hbar^2 kappa^2 (1 + cos(D kappa / 2)) / (4 m e D).
double critical_field(const DoubleWellModel& model,
                      const PhysParams& params = PhysParams::natural());

// Upper estimate hbar^2 / (20 m e rho0^2) valid for the knot defaults.
double critical_field_bound(const DoubleWellModel& model,
                            const PhysParams& params = PhysParams::natural());

// Effective electric dipole moment mu = e (d + D) of a charge parked in one
// well.
double dipole_moment(const DoubleWellModel& model,
                     const PhysParams& params = PhysParams::natural());

// Operating temperature ceiling U0 / k_B.
double max_temperature(const DoubleWellModel& model,
                       const PhysParams& params = PhysParams::natural());

}  // namespace knotqubit

#endif  // KNOTQUBIT_POTENTIAL_HPP
