#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "qhall/classical.hpp"
#include "qhall/errors.hpp"
#include "qhall/models.hpp"

using namespace qhall;
using namespace qhall::classical;

namespace {

const PhaseState kPreset{0.0, 1.0, 1.0, -2.0, 0.0};

}  // namespace

TEST_CASE("Hamilton's equations") {
  auto r = hamilton_rhs({0, 0, 1, 0, 0}, 1, 2);
  CHECK(r == std::array<double, 4>{1, 0, 0, 0});
  CHECK(hamilton_rhs({0, 0.3, 2.0, 0, 0}, 1.5, 0) == std::array<double, 4>{0, 0, 0, 0});
  CHECK_THROWS_AS(hamilton_rhs({0, 0, 0, 1, 1}, 1, 2), DomainError);
  CHECK_THROWS_AS(hamilton_rhs({0, 0, -1, 1, 1}, 1, 2), DomainError);

  // The right-hand side is the symbolic gradient of the exact Hamiltonian.
  opalg::PhasePoly H = models::classical_hamiltonian();
  for (PhaseState s : {PhaseState{0, 0.4, 1.3, -0.7, 2.1}, PhaseState{0, -2, 0.2, 1.5, -0.3}}) {
    for (double beta : {0.0, 1.5, 4.0}) {
      double a = 1.7;
      std::vector<std::complex<double>> v{s.x, s.y, s.px, s.py, beta, a};
      auto rhs = hamilton_rhs(s, a, beta);
      CHECK(rhs[0] == doctest::Approx(H.derivative("px").evaluate(v).real()));
      CHECK(rhs[1] == doctest::Approx(H.derivative("py").evaluate(v).real()));
      CHECK(rhs[2] == 0.0);
      CHECK(rhs[3] == doctest::Approx(-H.derivative("y").evaluate(v).real()));
    }
  }
}

TEST_CASE("conserved values") {
  auto v = conserved_values({0, 0, 1, 0, 0}, 1, 2);
  CHECK(v.H == 1.0);
  CHECK(v.L3 == 4.0);
  CHECK(conserved_values({0, 0, 2.5, 1.3, 0}, 1, 2).L1 == 0.0);
  auto p = conserved_values(kPreset, 1, 4);
  CHECK(p.H == 1.0);
  CHECK(p.L1 == -2.0);
  CHECK(p.L2 == -2.0);
  CHECK(p.L2_printed == 0.0);
  CHECK(p.L3 == 8.0);
  // 4a^2 H = L2 L3 + L1^2 + beta^2 with the closing charge.
  CHECK(4 * p.H == p.L2 * p.L3 + p.L1 * p.L1 + 16.0);
}

TEST_CASE("RK4 trajectories") {
  auto still = integrate_rk4({0, 0.5, 2.0, 0, 0}, 1, 0, 0.1, 20);
  REQUIRE(still.states.size() == 21);
  for (const auto& s : still.states) {
    CHECK(s.x == 0.5);
    CHECK(s.y == 2.0);
  }
  CHECK(still.states.back().t == doctest::Approx(2.0));

  auto single = integrate_rk4(kPreset, 1, 4, 1e-3, 0);
  CHECK(single.states.size() == 1);
  CHECK_FALSE(single.domain_exit);

  // Geodesic motion.
  PhaseState geo{0, 0.2, 1.5, 0.8, -0.6};
  auto traj = integrate_rk4(geo, 1, 0, 1e-3, 10000);
  CHECK(conserved_drift(traj).H <= 1e-10);

  // Halving dt cuts the max H drift by about 16.
  double period = orbit_period(kPreset, 1, 4);
  auto coarse = integrate_rk4(kPreset, 1, 4, period / 400, 400);
  auto fine = integrate_rk4(kPreset, 1, 4, period / 800, 800);
  double ratio = conserved_drift(coarse).H / conserved_drift(fine).H;
  CHECK(ratio > 12);
  CHECK(ratio < 20);

  CHECK_THROWS_AS(integrate_rk4(kPreset, 1, 4, 0, 10), DomainError);
  CHECK_THROWS_AS(integrate_rk4({0, 0, -1, 0, 0}, 1, 4, 0.1, 10), DomainError);
}

TEST_CASE("domain exit") {
  // Straight down a geodesic with no field: y decays but the step overshoots.
  auto traj = integrate_rk4({0, 0, 1.0, 0, -40}, 1, 0, 0.5, 100);
  CHECK(traj.domain_exit);
  CHECK(traj.states.size() < 101);
  for (const auto& s : traj.states) CHECK(s.y > 0.0);
}

TEST_CASE("bounded preset orbit") {
  CHECK(is_bounded(kPreset, 4));
  CHECK_FALSE(is_bounded(kPreset, 1));
  double period = orbit_period(kPreset, 1, 4);
  CHECK(period == doctest::Approx(2 * std::numbers::pi / std::sqrt(3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(orbit_period(kPreset, 1, 1), DomainError);

  long steps = 10 * 1000;
  auto traj = integrate_rk4(kPreset, 1, 4, 10 * period / steps, steps);
  CHECK_FALSE(traj.domain_exit);
  auto drift = conserved_drift(traj);
  CHECK(drift.max() <= 1e-8);
  CHECK(std::abs(traj.states.back().x - kPreset.x) < 1e-8);
  CHECK(std::abs(traj.states.back().y - kPreset.y) < 1e-8);

  auto fit = circle_fit(traj);
  CHECK(fit.rms / fit.r <= 1e-6);
  CHECK(fit.cx == doctest::Approx(1.0));
  CHECK(fit.cy == doctest::Approx(2.0));
  CHECK(fit.r == doctest::Approx(1.0));

  // The printed p_y charge is not conserved along the orbit.
  double lo = 0, hi = 0;
  for (const auto& s : traj.states) {
    double v = conserved_values(s, 1, 4).L2_printed;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  CHECK(hi - lo > 1.0);
}

TEST_CASE("circle fit") {
  std::vector<PhaseState> pts;
  for (int i = 0; i < 40; ++i) {
    double th = 2 * std::numbers::pi * i / 40;
    pts.push_back({0, 3 + 2.5 * std::cos(th), 7 + 2.5 * std::sin(th), 0, 0});
  }
  auto fit = circle_fit(pts);
  CHECK(fit.rms < 1e-14);
  CHECK(fit.cx == doctest::Approx(3));
  CHECK(fit.cy == doctest::Approx(7));
  CHECK(fit.r == doctest::Approx(2.5));

  std::vector<PhaseState> line;
  for (int i = 0; i < 20; ++i) line.push_back({0, 0.5 * i, 1 + 0.25 * i, 0, 0});
  CHECK_THROWS_AS(circle_fit(line), FitSingularError);
  pts.resize(9);
  CHECK_THROWS_AS(circle_fit(pts), DomainError);
}

TEST_CASE("RK4 convergence order and rms monotonicity") {
  double period = orbit_period(kPreset, 1, 4);
  double order = convergence_order(kPreset, 1, 4, period, {8e-3, 4e-3, 2e-3, 1e-3});
  CHECK(order >= 3.7);
  CHECK(order <= 4.3);

  double prev = INFINITY;
  for (double dt : {1e-2, 5e-3, 2.5e-3}) {
    long steps = std::lround(period / dt);
    double rel = circle_fit(integrate_rk4(kPreset, 1, 4, period / steps, steps)).rms;
    CHECK(rel < prev);
    prev = rel;
  }
}

TEST_CASE("trajectory CSV") {
  auto traj = integrate_rk4(kPreset, 1, 4, 0.01, 2);
  std::string csv = to_csv(traj);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,x,y,px,py,H,L1,L2,L3");
  std::getline(in, line);
  CHECK(line == "0,1,1,-2,0,1,-2,-2,8");
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
  CHECK(to_csv(traj) == csv);
}
