#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <json.hpp>
#include <numbers>
#include <random>

#include "qhall/errors.hpp"
#include "qhall/geometry.hpp"
#include "qhall/models.hpp"
#include "qhall/numverify.hpp"
#include "qhall/spectra.hpp"

using namespace qhall;
using namespace qhall::numverify;
using opalg::RationalFunc;

namespace {

const Bindings kHalfPlane{{"beta", 5.0}, {"a", 1.0}, {"m", 1.0}};

Field halfplane_psi(double beta, long l, double c) {
  return [=](std::span<const double> p) { return spectra::eigenfunction_halfplane(beta, l, c, p[0], p[1]); };
}

std::vector<std::vector<double>> residual_points() {
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < 20; ++i) {
    double y = 0.1 * std::pow(100.0, i / 19.0);
    pts.push_back({0.37 * i - 2.0, y});
  }
  return pts;
}

StepRule scaled_step(double c, double factor = 2e-3) {
  return [=](std::span<const double> p) { return factor * std::min(p[1], 1.0 / c); };
}

}  // namespace

TEST_CASE("fd_apply is exact on low-degree polynomials") {
  auto t = geometry::symbols_for(geometry::MetricKind::Flat);
  DiffOp dxx = DiffOp::derivative(t, "x", 2);
  Field x2 = [](std::span<const double> p) { return Complex(p[0] * p[0]); };
  std::vector<double> pt{0.7, -0.3};
  CHECK(std::abs(fd_apply(dxx, {}, x2, pt, 0.1) - 2.0) < 1e-12);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    // cubic p(x, y) and its exact image under a mixed operator.
    double c[10];
    for (double& v : c) v = u(rng);
    auto p = [&](double x, double y) {
      return c[0] + c[1] * x + c[2] * y + c[3] * x * x + c[4] * x * y + c[5] * y * y + c[6] * x * x * x +
             c[7] * x * x * y + c[8] * x * y * y + c[9] * y * y * y;
    };
    Field f = [&](std::span<const double> q) { return Complex(p(q[0], q[1])); };
    RationalFunc X = RationalFunc::symbol(t, "x"), Y = RationalFunc::symbol(t, "y");
    DiffOp op = DiffOp(X) * DiffOp::derivative(t, "x") * DiffOp::derivative(t, "y") +
                DiffOp::derivative(t, "y", 2) + DiffOp(Y * Y);
    double x = u(rng), y = u(rng);
    double pxy = c[4] + 2 * c[7] * x + 2 * c[8] * y;
    double pyy = 2 * c[5] + 2 * c[8] * x + 6 * c[9] * y;
    double want = x * pxy + pyy + y * y * p(x, y);
    std::vector<double> q{x, y};
    CHECK(std::abs(fd_apply(op, {}, f, q, 0.05) - want) < 1e-11);
  }
}

TEST_CASE("fd_apply errors") {
  auto t = geometry::symbols_for(geometry::MetricKind::HalfPlane);
  auto [px, py] = geometry::dewitt_momenta(geometry::make_metric(geometry::MetricKind::HalfPlane));
  Field one = [](std::span<const double>) { return Complex(1.0); };
  std::vector<double> origin{0.0, 0.0};
  CHECK_THROWS_AS(fd_apply(py, kHalfPlane, one, origin, 1e-3), SingularityError);

  DiffOp H = models::hamiltonian_halfplane();
  std::vector<double> pt{0.0, 1.0};
  CHECK_THROWS_AS(fd_apply(H, {{"beta", 5.0}}, one, pt, 1e-3), DeclarationError);
  CHECK_THROWS_AS(fd_apply(DiffOp::derivative(t, "x", 3), {}, one, pt, 1e-3), DomainError);
  CHECK_THROWS_AS(fd_apply(H, kHalfPlane, one, pt, 0.0), DomainError);
}

TEST_CASE("half-plane eigenfunction residuals") {
  DiffOp H = models::hamiltonian_halfplane();
  std::vector<double> pt{0.0, 1.0};
  Complex psi = spectra::eigenfunction_halfplane(5, 0, 1, 0, 1);
  CHECK(std::abs(fd_apply(H, kHalfPlane, halfplane_psi(5, 0, 1), pt, 2e-3) - 2.5 * psi) < 1e-8 * std::abs(psi));

  auto pts = residual_points();
  for (double c : {0.5, 1.0, 2.0}) {
    for (long l = 0; l < 5; ++l) {
      double E = spectra::landau_halfplane(5, l).energy;
      INFO("c=" << c << " l=" << l);
      CHECK(residual_check(H, kHalfPlane, halfplane_psi(5, l, c), E, pts, scaled_step(c)) <= 1e-6);
      // With E shifted by one the residual is exactly 1/(E + 1) at every point.
      double wrong = residual_check(H, kHalfPlane, halfplane_psi(5, l, c), E + 1.0, pts, scaled_step(c));
      CHECK(std::abs(wrong - 1.0 / (E + 1.0)) < 1e-6);
    }
  }
}

TEST_CASE("residual error falls as h^4") {
  DiffOp H = models::hamiltonian_halfplane();
  std::vector<std::vector<double>> pts{{0.0, 1.5}, {0.3, 3.0}};
  double E = spectra::landau_halfplane(5, 2).energy;
  std::vector<double> r;
  for (double h : {0.08, 0.04, 0.02}) r.push_back(residual_check(H, kHalfPlane, halfplane_psi(5, 2, 1), E, pts, h));
  for (int k = 0; k + 1 < 3; ++k) {
    double order = std::log2(r[k] / r[k + 1]);
    CHECK(order > 3.5);
    CHECK(order < 4.5);
  }
}

TEST_CASE("flat ground state residual") {
  DiffOp H = models::flat_to_real(models::hamiltonian_flat_complex());
  double hbar = 1.0, m = 1.3, w = 0.8;
  double z0sq = hbar / (m * w);
  Field psi = [&](std::span<const double> p) { return Complex(std::exp(-(p[0] * p[0] + p[1] * p[1]) / (4 * z0sq))); };
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < 20; ++i) pts.push_back({std::cos(i) * 0.2 * i, std::sin(1.7 * i) * 0.15 * i});
  Bindings b{{"hbar", hbar}, {"m", m}, {"omega_c", w}};
  CHECK(residual_check(H, b, psi, hbar * w / 2, pts, 1e-3) <= 1e-6);
  CHECK(residual_check(H, b, psi, hbar * w / 2 + 1, pts, 1e-3) >= 0.1);
}

TEST_CASE("tridiagonal eigenvalues") {
  for (int n : {1, 2, 7, 50}) {
    std::vector<double> d(n, 2.0), e(n - 1, -1.0);
    auto eigs = tridiag_eigs(d, e, n);
    for (int j = 1; j <= n; ++j) {
      CHECK(std::abs(eigs[j - 1] - (2 - 2 * std::cos(j * std::numbers::pi / (n + 1)))) < 1e-11);
    }
  }
  CHECK(tridiag_eigs({3.5}, {}, 1) == std::vector<double>{3.5});
  CHECK(tridiag_eigs({3.5}, {}, 4).size() == 1);
  auto diag = tridiag_eigs({4, -1, 2.5, 0}, {0, 0, 0}, 3);
  CHECK(std::abs(diag[0] + 1) < 1e-12);
  CHECK(std::abs(diag[1] - 0) < 1e-12);
  CHECK(std::abs(diag[2] - 2.5) < 1e-12);

  std::mt19937 rng(11);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 40;
    std::vector<double> d(n), e(n - 1);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) A(i, i) = d[i] = 5 * g(rng);
    for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = A(i + 1, i) = e[i] = g(rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A);
    auto eigs = tridiag_eigs(d, e, 6);
    for (int j = 0; j < 6; ++j) CHECK(std::abs(eigs[j] - solver.eigenvalues()[j]) < 1e-10);
    CHECK(sturm_count(d, e, 0.0) == static_cast<std::size_t>((solver.eigenvalues().array() < 0.0).count()));
  }
  CHECK_THROWS_AS(tridiag_eigs({}, {}, 1), DomainError);
}

TEST_CASE("Whittaker oracle") {
  FDGrid grid;
  auto r = whittaker_oracle(5, grid, 5);
  REQUIRE(r.mu.size() == 5);
  for (int l = 0; l < 5; ++l) {
    double n = 5 - l - 0.5;
    // mu = 0 at the top level, where only the energy has a relative error.
    if (l < 4) CHECK(std::abs(r.mu[l] - (0.25 - n * n)) <= 1e-3 * std::abs(0.25 - n * n));
    CHECK(r.relerr[l] <= 1e-3);
    CHECK(r.analytic[l] == spectra::landau_halfplane(5, l).energy);
  }
  CHECK(r.bound_count == 5);

  for (double beta : {2.0, 5.0, 10.5}) {
    CHECK(whittaker_oracle(beta, grid, 1).bound_count ==
          static_cast<std::size_t>(spectra::halfplane_level_count(spectra::Rational(beta))));
  }

  auto doc = nlohmann::json::parse(r.to_json());
  CHECK(doc["grid"]["n"] == 16000);
  CHECK(doc["relerr"].size() == 5);

  CHECK_THROWS_AS(whittaker_oracle(0.5, grid, 1), DomainError);
  CHECK_THROWS_AS(whittaker_oracle(5, grid, 6), DomainError);
  CHECK_THROWS_AS(whittaker_oracle(5, FDGrid{1e-3, 80, 50}, 1), DomainError);
  CHECK_THROWS_AS(whittaker_oracle(5, FDGrid{1e-3, 2.0, 400}, 5), ResolutionError);
}

TEST_CASE("Whittaker oracle refinement") {
  auto coarse = whittaker_oracle(5, FDGrid{1e-3, 80, 16000}, 5);
  auto fine = whittaker_oracle(5, FDGrid{1e-3, 80, 32000}, 5);
  for (int l = 0; l < 4; ++l) {
    double ratio = coarse.relerr[l] / fine.relerr[l];
    INFO("l=" << l);
    CHECK(ratio >= 3.0);
    CHECK(ratio <= 5.0);
  }
  // The top level (n = 1/2, phi ~ s) is dominated by the Dirichlet cut at
  // s_min: its error scales with s_min and not with h.
  auto shallow = whittaker_oracle(5, FDGrid{1e-4, 80, 16000}, 5);
  double ratio = coarse.relerr[4] / shallow.relerr[4];
  CHECK(ratio > 8.0);
  CHECK(ratio < 12.0);
}

TEST_CASE("norm quadrature") {
  for (double c : {0.5, 1.0, 2.0}) {
    // l = 0: integral of e^{-2cy} y^{2beta - 2} = Gamma(2beta - 1)/(2c)^(2beta - 1).
    double want = std::tgamma(9.0) / std::pow(2 * c, 9.0);
    CHECK(std::abs(norm_quadrature(5, 0, c) - want) < 1e-11 * want);
  }
  for (long l = 0; l < 5; ++l) {
    auto f = [&](double y) { return std::norm(spectra::eigenfunction_halfplane(5, l, 1, 0, y)) / (y * y); };
    double oracle = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 200.0, 15, 1e-14);
    double got = norm_quadrature(5, l, 1);
    CHECK(got > 0.0);
    CHECK(std::abs(got - oracle) < 1e-9 * oracle);
    CHECK(std::abs(norm_quadrature(5, l, 1, 1, 2 * 48.0) - got) < 1e-10 * got);
  }
  CHECK(norm_quadrature(5, 0, 1, 2.0) == doctest::Approx(4 * norm_quadrature(5, 0, 1)).epsilon(1e-14));
  double edge = norm_quadrature(4.6, 4, 1);
  CHECK(std::isfinite(edge));
  CHECK(edge > 0.0);
  CHECK_THROWS_AS(norm_quadrature(4.5, 4, 1), NonNormalizableError);
  CHECK_THROWS_AS(norm_quadrature(5, 5, 1), NonNormalizableError);
  CHECK_THROWS_AS(norm_quadrature(5, -1, 1), NoBoundStateError);
}

TEST_CASE("adaptive Simpson") {
  CHECK(std::abs(adaptive_simpson([](double x) { return std::sin(x); }, 0, std::numbers::pi, 1e-12) - 2) < 1e-11);
  CHECK(adaptive_simpson([](double x) { return x * x * x; }, 0, 2, 1e-14) == doctest::Approx(4.0).epsilon(1e-15));
}
