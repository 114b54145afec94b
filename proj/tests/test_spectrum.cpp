#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

#include "knotqubit/potential.hpp"
#include "knotqubit/spectrum.hpp"
#include "oracles.hpp"

using namespace knotqubit;
using oracles::pi;

TEST_CASE("single well: C = 5/8 binds exactly one even state") {
  const auto model = DoubleWellModel::knot(1.0, 0.0);  // C = 5/8, D = 5
  const auto states = solve_single_well(model);
  REQUIRE(states.size() == 1);
  CHECK(states[0].parity == Parity::Even);

  const double x = states[0].k * model.D / 2.0;
  CHECK(x == doctest::Approx(0.537022365981).epsilon(1e-9));
  CHECK(states[0].k == doctest::Approx(0.2148089464).epsilon(1e-9));
  // the rounded 1/(5 rho0) estimate is good to about 7%
  CHECK(states[0].k == doctest::Approx(0.2).epsilon(0.08));

  // residual of the printed transcendental form
  const double residual = std::tan(x) - std::sqrt(model.C * model.C - x * x) / x;
  CHECK(std::abs(residual) < 1e-9);
}

TEST_CASE("single well: exact root energy is -0.26 U0, not the rounded -0.36 U0") {
  const auto model = DoubleWellModel::knot(1.0, 0.0);
  const auto states = solve_single_well(model);
  CHECK(states[0].energy / model.U0 == doctest::Approx(-0.2617138648).epsilon(1e-7));
  // the rounded k1 = 1/(5 rho0) would give -(3/5)^2 = -0.36 instead
  CHECK(std::abs(states[0].energy / model.U0 - (-0.36)) > 0.05);
}

TEST_CASE("single well: energy expressions agree identically") {
  for (double C_scale : {1.0, 3.0, 6.0}) {
    const auto model = DoubleWellModel::custom(1.0, 2.5 * C_scale, 0.0);
    const PhysParams params;
    for (const auto& st : solve_single_well(model)) {
      CHECK(st.k * st.k + st.q * st.q ==
            doctest::Approx(model.k0() * model.k0()).epsilon(1e-10));
      const double from_q = -params.kinetic_factor() * st.q * st.q;
      CHECK(st.energy == doctest::Approx(from_q).epsilon(1e-10));
    }
  }
}

TEST_CASE("single well: root counts match the scan oracle") {
  // well parameter C = kappa D / 4; the scan oracle counts tan-form roots
  struct Case {
    double C;
    int even, odd;
  };
  for (const auto& c : {Case{0.625, 1, 0}, Case{4.0, 2, 1}, Case{7.0, 3, 2}}) {
    CHECK(oracles::count_even_roots(c.C) == c.even);
    CHECK(oracles::count_odd_roots(c.C) == c.odd);
    const auto states = solve_single_well(DoubleWellModel::custom(1.0, 4.0 * c.C, 0.0));
    int even = 0, odd = 0;
    for (const auto& st : states) (st.parity == Parity::Even ? even : odd)++;
    CHECK(even == c.even);
    CHECK(odd == c.odd);

    // every root satisfies its defining transcendental to 1e-9
    for (const auto& st : states) {
      const double x = st.k * c.C * 2.0;  // k D / 2 with D = 4 C
      const double residual =
          st.parity == Parity::Even
              ? std::tan(x) - std::sqrt(c.C * c.C - x * x) / x
              : std::tan(x) + x / std::sqrt(c.C * c.C - x * x);
      CHECK(std::abs(residual) < 1e-9);
    }
  }
}

TEST_CASE("numeric spectrum: infinite square well levels") {
  PotentialProfile box;
  box.representation = PotentialRep::PiecewiseConstant;
  box.breakpoints = {0.0, 3.0};
  box.values = {0.0};
  box.domain_min = 0.0;
  box.domain_max = 3.0;
  box.boundary = BoundaryKind::HardWall;
  const Grid grid{0.0, 3.0, 2000};
  const auto states = numeric_spectrum(box, grid, 3);
  REQUIRE(states.size() == 3);
  for (int n = 1; n <= 3; ++n) {
    const double exact = (n * pi / 3.0) * (n * pi / 3.0);
    CHECK(states[n - 1].energy == doctest::Approx(exact).epsilon(1e-3));
  }
}

TEST_CASE("numeric spectrum: finite well ground state matches the transcendental root") {
  const auto model = DoubleWellModel::knot(0.5, 0.0);  // D = 2.5, U0 = 0.25
  const auto analytic = solve_single_well(model);

  PotentialProfile well;
  well.representation = PotentialRep::PiecewiseConstant;
  well.breakpoints = {-1.25, 1.25};
  well.values = {-0.25};
  well.domain_min = -40.0;
  well.domain_max = 40.0;
  const Grid grid{-40.0, 40.0, 4000};
  const auto numeric = numeric_spectrum(well, grid, 1);
  REQUIRE(numeric.size() == 1);
  CHECK(std::abs(numeric[0].energy - analytic[0].energy) < 1e-3);
  CHECK(numeric[0].parity == Parity::Even);

  // L2 normalization of the sampled wavefunction
  double norm = 0.0;
  for (double v : numeric[0].psi) norm += v * v;
  norm *= grid.spacing();
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("numeric spectrum: parity alternates for the C = 4 well") {
  const auto model = DoubleWellModel::custom(1.0, 16.0, 0.0);  // C = 4
  PotentialProfile well;
  well.representation = PotentialRep::PiecewiseConstant;
  well.breakpoints = {-8.0, 8.0};
  well.values = {-model.U0};
  well.domain_min = -60.0;
  well.domain_max = 60.0;
  const Grid grid{-60.0, 60.0, 4001};
  const auto states = numeric_spectrum(well, grid, 4);
  REQUIRE(states.size() == 4);
  CHECK(states[0].parity == Parity::Even);
  CHECK(states[1].parity == Parity::Odd);
  CHECK(states[2].parity == Parity::Even);
  CHECK(states[3].parity == Parity::Odd);
}

TEST_CASE("numeric spectrum: eigenvalues converge monotonically from below") {
  // The 3-point Laplacian underestimates the kinetic term, so refining the
  // grid raises every level toward its converged value.
  PotentialProfile well;
  well.representation = PotentialRep::PiecewiseConstant;
  well.breakpoints = {-1.25, 1.25};
  well.values = {-0.25};
  well.domain_min = -30.0;
  well.domain_max = 30.0;
  double prev = -1e300;
  double prev_gap = 1e300;
  for (std::size_t n : {750u, 1500u, 3000u}) {
    const Grid grid{-30.0, 30.0, n};
    const double e = numeric_spectrum(well, grid, 1)[0].energy;
    CHECK(e > prev);
    if (prev != -1e300) {
      const double gap = e - prev;
      CHECK(gap < prev_gap);
      prev_gap = gap;
    }
    prev = e;
  }
}

TEST_CASE("numeric spectrum: grid preconditions enforced") {
  const auto pot = double_well_potential(DoubleWellModel::knot(0.5, 0.01));
  // 8 nodes across the d = 0.01 barrier needs h <= 0.00125
  const Grid coarse{-10.0, 10.0, 2001};
  CHECK_THROWS_AS(numeric_spectrum(pot, coarse, 2), std::invalid_argument);

  PotentialProfile walled = pot;
  walled.boundary = BoundaryKind::HardWall;
  walled.domain_min = -5.0;
  walled.domain_max = 5.0;
  const Grid mismatched{-4.0, 5.0, 2001};
  CHECK_THROWS_AS(numeric_spectrum(walled, mismatched, 2), std::invalid_argument);

  const Grid not_covering{-1.0, 1.0, 64};
  CHECK_THROWS_AS(numeric_spectrum(pot, not_covering, 2), std::invalid_argument);
}

TEST_CASE("hard wall: l = 50 D reduces to the isolated-well root") {
  const auto model = DoubleWellModel::knot(1.0, 0.0, PhysParams::natural(), 250.0);
  const auto walled = solve_hard_wall(model);
  const auto isolated = solve_single_well(model);
  REQUIRE(walled.size() == 1);
  CHECK(walled[0].parity == Parity::Even);
  CHECK(std::abs(walled[0].k - isolated[0].k) < 1e-6);
}

TEST_CASE("hard wall: l = 50 D reproduces both parities of a C = 4 well") {
  const auto model = DoubleWellModel::custom(1.0, 16.0, 0.0, PhysParams::natural(), 800.0);
  const auto walled = solve_hard_wall(model);
  const auto isolated = solve_single_well(model);
  REQUIRE(walled.size() == isolated.size());
  for (std::size_t i = 0; i < walled.size(); ++i) {
    CHECK(walled[i].parity == isolated[i].parity);
    CHECK(std::abs(walled[i].k - isolated[i].k) < 1e-6);
  }
}

TEST_CASE("hard wall: l = 5 D negative spectrum matches the numeric box") {
  const auto model = DoubleWellModel::knot(1.0, 0.0, PhysParams::natural(), 25.0);
  const auto analytic = solve_hard_wall(model);
  REQUIRE(analytic.size() == 1);

  const auto pot = hard_wall_single_well_potential(model);
  const auto grid = Grid::for_potential(pot, 12000);
  const auto numeric = numeric_spectrum(pot, grid, 2);
  CHECK(std::abs(numeric[0].energy - analytic[0].energy) < 1e-3);
  // the next numeric level is a positive-energy box state, not a bound one
  CHECK(numeric[1].energy > 0.0);
}

TEST_CASE("hard wall: richer C = 4 well against the numeric box") {
  const auto model = DoubleWellModel::custom(1.0, 16.0, 0.0, PhysParams::natural(), 32.0);
  const auto analytic = solve_hard_wall(model);
  REQUIRE(analytic.size() == 3);

  const auto pot = hard_wall_single_well_potential(model);
  const auto grid = Grid::for_potential(pot, 16000);
  const auto numeric = numeric_spectrum(pot, grid, 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(std::abs(numeric[i].energy - analytic[i].energy) < 1e-3);
}

TEST_CASE("hard wall: threshold flag marks roots at q ~ 0") {
  const auto state = bound_state_from_energy(-1e-16, -0.25, PhysParams::natural());
  CHECK(state.at_threshold);
  const auto bound = bound_state_from_energy(-0.1, -0.25, PhysParams::natural());
  CHECK_FALSE(bound.at_threshold);
  CHECK(bound.q == doctest::Approx(std::sqrt(0.1)).epsilon(1e-12));
}

TEST_CASE("hard wall: missing l rejected") {
  CHECK_THROWS_AS(solve_hard_wall(DoubleWellModel::knot(1.0, 0.0)), std::invalid_argument);
}

TEST_CASE("field-shaped device: V-well splitting grows with the field") {
  const double L = 5.0;
  double prev_gap = 0.0;
  for (double field : {0.05, 0.1, 0.2, 0.4, 0.8}) {
    PotentialProfile v;
    v.representation = PotentialRep::PiecewiseLinear;
    v.breakpoints = {-L, 0.0, L};
    v.values = {0.0, -field * L, 0.0};
    v.domain_min = -L;
    v.domain_max = L;
    v.boundary = BoundaryKind::HardWall;
    const Grid grid{-L, L, 2001};
    const auto states = numeric_spectrum(v, grid, 2);
    REQUIRE(states.size() == 2);
    const double gap = states[1].energy - states[0].energy;
    CHECK(gap > prev_gap);
    prev_gap = gap;
  }
}
