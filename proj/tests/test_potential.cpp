#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "knotqubit/dynamics.hpp"
#include "knotqubit/potential.hpp"
#include "knotqubit/spectrum.hpp"
#include "oracles.hpp"

using namespace knotqubit;
using oracles::pi;

TEST_CASE("effective potential: zero curvature maps to zero potential") {
  CurvatureProfile profile;
  for (int i = 0; i < 32; ++i) {
    profile.s.push_back(0.5 * i);
    profile.kappa.push_back(0.0);
  }
  const auto v = effective_potential(profile);
  for (double val : v.values) CHECK(val == 0.0);
}

TEST_CASE("effective potential: unit curvature gives V = -1/4 in natural units") {
  CurvatureProfile profile;
  for (int i = 0; i < 32; ++i) {
    profile.s.push_back(0.5 * i);
    profile.kappa.push_back(1.0);
  }
  const auto v = effective_potential(profile);
  for (double val : v.values) CHECK(val == doctest::Approx(-0.25).epsilon(1e-15));
}

TEST_CASE("effective potential: trefoil minimum sits at maximal curvature") {
  const auto out = reparametrize_arclength(oracles::trefoil_curve(8192), 2048);
  const auto profile = curvature_profile(out);
  const auto v = effective_potential(profile);

  double kappa_max = 0.0;
  std::size_t arg_kappa = 0;
  for (std::size_t i = 0; i < profile.kappa.size(); ++i) {
    if (profile.kappa[i] > kappa_max) {
      kappa_max = profile.kappa[i];
      arg_kappa = i;
    }
  }
  double v_min = 1e300;
  std::size_t arg_v = 0;
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    if (v.values[i] < v_min) {
      v_min = v.values[i];
      arg_v = i;
    }
  }
  CHECK(arg_v == arg_kappa);
  CHECK(v_min == doctest::Approx(-kappa_max * kappa_max / 4.0).epsilon(1e-9));
  for (double val : v.values) CHECK(val <= 0.0);
}

TEST_CASE("double well: knot defaults at rho0 = 1/2") {
  const auto model = DoubleWellModel::knot(0.5, 0.01);
  CHECK(model.U0 == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(model.D == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(model.kappa == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(model.C == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(model.k0() == doctest::Approx(0.5).epsilon(1e-15));

  const auto v = double_well_potential(model);
  REQUIRE(v.breakpoints.size() == 4);
  CHECK(v.breakpoints[0] == doctest::Approx(-2.505).epsilon(1e-15));
  CHECK(v.breakpoints[1] == doctest::Approx(-0.005).epsilon(1e-15));
  CHECK(v.breakpoints[2] == doctest::Approx(0.005).epsilon(1e-15));
  CHECK(v.breakpoints[3] == doctest::Approx(2.505).epsilon(1e-15));
  CHECK(v.values[0] == -0.25);
  CHECK(v.values[1] == 0.0);
  CHECK(v.values[2] == -0.25);

  // mirror symmetry at breakpoints, exactly
  for (std::size_t i = 0; i < v.breakpoints.size(); ++i)
    CHECK(v.breakpoints[i] == -v.breakpoints[v.breakpoints.size() - 1 - i]);
  CHECK(v.is_even());
}

TEST_CASE("double well: d = 0 merges into a single well of width 2D") {
  const auto v = double_well_potential(DoubleWellModel::knot(0.5, 0.0));
  REQUIRE(v.breakpoints.size() == 2);
  CHECK(v.breakpoints[1] - v.breakpoints[0] == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(v.values[0] == -0.25);
  CHECK_THROWS_AS(DoubleWellModel::knot(0.5, -0.1), std::invalid_argument);
}

TEST_CASE("double well: hard walls clip the profile at +-(d/2 + l)") {
  const auto model = DoubleWellModel::knot(0.5, 1.0, PhysParams::natural(), 10.0);
  const auto v = double_well_potential(model);
  CHECK(v.boundary == BoundaryKind::HardWall);
  CHECK(v.domain_min == doctest::Approx(-10.5).epsilon(1e-15));
  CHECK(v.domain_max == doctest::Approx(10.5).epsilon(1e-15));
  CHECK(v.breakpoints.front() == doctest::Approx(-10.5).epsilon(1e-15));
  CHECK(v.breakpoints.back() == doctest::Approx(10.5).epsilon(1e-15));
  CHECK(v.is_even());
}

TEST_CASE("tilt: zero field is the identity") {
  const auto base = double_well_potential(DoubleWellModel::knot(0.5, 1.0));
  const auto tilted = tilt_potential(base, 0.0);
  const auto linear = base.to_piecewise_linear();
  REQUIRE(tilted.values.size() == linear.values.size());
  for (std::size_t i = 0; i < tilted.values.size(); ++i)
    CHECK(tilted.values[i] == linear.values[i]);
}

TEST_CASE("tilt: end-to-end drop across a single well is charge*field*D") {
  PotentialProfile well;
  well.representation = PotentialRep::PiecewiseConstant;
  well.breakpoints = {-1.25, 1.25};
  well.values = {-0.25};
  well.domain_min = -1.25;
  well.domain_max = 1.25;
  const double field = 0.07;
  const auto tilted = tilt_potential(well, field);
  const double drop = tilted.values.back() - tilted.values.front();
  CHECK(drop == doctest::Approx(field * 2.5).epsilon(1e-12));
}

TEST_CASE("tilt: +field then -field returns the node values") {
  const auto base = double_well_potential(DoubleWellModel::knot(0.5, 2.5)).to_piecewise_linear();
  const auto round_trip = tilt_potential(tilt_potential(base, 0.13), -0.13);
  REQUIRE(round_trip.values.size() == base.values.size());
  for (std::size_t i = 0; i < base.values.size(); ++i)
    CHECK(round_trip.values[i] == doctest::Approx(base.values[i]).epsilon(1e-14));
}

TEST_CASE("tilt: ground state localizes in the downhill well") {
  // positive charge, positive field: the ramp rises with s, downhill is s < 0
  const auto model = DoubleWellModel::knot(0.5, 5.0);
  const auto tilted = tilt_potential(double_well_potential(model), 0.05);
  Grid grid{-45.0, 45.0, 6001};
  const auto states = numeric_spectrum(tilted, grid, 1);
  REQUIRE(states.size() == 1);
  const auto [p_left, p_right] = well_population(states[0].psi, grid);
  CHECK(p_left > 0.9);
  CHECK(p_left + p_right == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("critical field: knot defaults") {
  const auto model = DoubleWellModel::knot(0.5, 0.01);
  const double e_max = critical_field(model);
  // (1 + cos 1.25) / 5 evaluated independently
  CHECK(e_max == doctest::Approx((1.0 + std::cos(1.25)) / 5.0).epsilon(1e-14));
  CHECK(e_max == doctest::Approx(0.2630644725).epsilon(1e-9));
  CHECK(critical_field_bound(model) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(e_max <= critical_field_bound(model));
}

TEST_CASE("critical field: vanishes at D kappa / 2 = pi and stays non-negative") {
  const auto node = DoubleWellModel::custom(1.0, 2.0 * pi, 0.0);
  CHECK(critical_field(node) == doctest::Approx(0.0).epsilon(1e-15));
  for (double D = 0.5; D < 12.0; D += 0.25) {
    const auto m = DoubleWellModel::custom(1.0, D, 0.0);
    CHECK(critical_field(m) >= 0.0);
  }
}

TEST_CASE("critical field: continuous in D near the zero") {
  const double eps = 1e-6;
  const auto lo = DoubleWellModel::custom(1.0, 2.0 * pi - eps, 0.0);
  const auto hi = DoubleWellModel::custom(1.0, 2.0 * pi + eps, 0.0);
  CHECK(std::abs(critical_field(lo) - critical_field(hi)) < 1e-9);
}

TEST_CASE("dipole moment") {
  CHECK(dipole_moment(DoubleWellModel::knot(0.5, 0.01)) ==
        doctest::Approx(2.51).epsilon(1e-15));
  PhysParams neutral;
  neutral.charge = 0.0;
  CHECK(dipole_moment(DoubleWellModel::knot(0.5, 0.01), neutral) == 0.0);
  CHECK(dipole_moment(DoubleWellModel::knot(1.0, 5.0)) ==
        doctest::Approx(10.0).epsilon(1e-15));
}

TEST_CASE("max temperature: natural units and the rho0 scaling") {
  CHECK(max_temperature(DoubleWellModel::knot(0.5, 0.0)) ==
        doctest::Approx(0.25).epsilon(1e-15));
  const double t1 = max_temperature(DoubleWellModel::knot(0.7, 0.0));
  const double t2 = max_temperature(DoubleWellModel::knot(1.4, 0.0));
  CHECK(t1 / t2 == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("max temperature: electron in a nanometer knot needs cryogenics") {
  const auto params = PhysParams::physical_electron();
  const auto model = DoubleWellModel::knot(1e-9, 0.0, params);
  const double t_max = max_temperature(model, params);
  CHECK(t_max == doctest::Approx(27.633).epsilon(1e-3));
  CHECK(t_max > 1.0);
  CHECK(t_max < 100.0);
}

TEST_CASE("potential profile: evaluation and conversion") {
  const auto v = double_well_potential(DoubleWellModel::knot(0.5, 1.0));
  CHECK(v.value_at(-1.5) == -0.25);
  CHECK(v.value_at(0.0) == 0.0);
  CHECK(v.value_at(1.5) == -0.25);
  CHECK(v.value_at(10.0) == 0.0);
  CHECK(v.value_at(-10.0) == 0.0);
  // jump samples take the two-sided average
  CHECK(v.value_at(0.5) == doctest::Approx(-0.125).epsilon(1e-12));
  CHECK(v.value_at(-0.5) == doctest::Approx(-0.125).epsilon(1e-12));

  const auto linear = v.to_piecewise_linear();
  CHECK(linear.representation == PotentialRep::PiecewiseLinear);
  CHECK(linear.value_at(-1.5) == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(linear.value_at(0.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(linear.is_even());
}

TEST_CASE("effective potential: vanishes exactly on the straight rods") {
  const auto profile = compose_segments({PiecewiseSegment::straight(4.0),
                                         PiecewiseSegment::arc(2.0, 1.5),
                                         PiecewiseSegment::straight(4.0)});
  const auto v = effective_potential(profile);
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    if (profile.kappa[i] == 0.0) {
      CHECK(v.values[i] == 0.0);
    } else {
      CHECK(v.values[i] < 0.0);
    }
  }
}

TEST_CASE("nano-bar device: composed chain matches the ideal double well") {
  // Quarter arcs of radius R act as wells of width pi R / 2; the glued-rod
  // potential solved end to end lands on the idealized model's ground level.
  const double R = 1.0, d = 1.0;
  const auto profile = compose_segments({PiecewiseSegment::straight(10.0),
                                         PiecewiseSegment::arc(oracles::pi * R / 2.0, R),
                                         PiecewiseSegment::straight(d),
                                         PiecewiseSegment::arc(oracles::pi * R / 2.0, R),
                                         PiecewiseSegment::straight(10.0)});
  const auto device_pot = effective_potential(profile);
  const auto device_grid = Grid::for_potential(device_pot, 6001, 30.0);
  const auto device = numeric_spectrum(device_pot, device_grid, 1);

  const auto model = DoubleWellModel::nano_bar(R, d);
  CHECK(model.D == doctest::Approx(oracles::pi * R / 2.0).epsilon(1e-15));
  const auto ideal = numeric_spectrum(double_well_potential(model),
                                      Grid{-45.0, 45.0, 6001}, 1);
  CHECK(std::abs(device[0].energy - ideal[0].energy) < 1e-3);
}

TEST_CASE("potential profile: invariants enforced") {
  PotentialProfile bad;
  bad.representation = PotentialRep::PiecewiseConstant;
  bad.breakpoints = {0.0, 1.0, 0.5};
  bad.values = {1.0, 2.0};
  bad.domain_min = 0.0;
  bad.domain_max = 1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  bad.breakpoints = {0.0, 0.5, 1.0};
  bad.values = {1.0};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
