// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/math/special_functions/factorials.hpp>

#include "qhall/classical.hpp"
#include "qhall/geometry.hpp"
#include "qhall/manybody.hpp"
#include "qhall/models.hpp"
#include "qhall/numverify.hpp"
#include "qhall/specfun.hpp"
#include "qhall/spectra.hpp"

using namespace qhall;
using opalg::DiffOp;
using manybody::Complex;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [failed]");
    pass = pass && ok;
  }
};

std::string num(double v, const char* f = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome identity_suite() {
  Outcome o;
  auto start = Clock::now();
  auto reports = models::run_identity_suite();
  double elapsed = seconds_since(start);
  int exact = 0;
  for (const auto& r : reports) {
    if (r.name == "disk-expansion") continue;
    if (r.status == models::Status::ExactPass) {
      ++exact;
    } else {
      o.require(false, r.name);
    }
  }
  o.require(exact == 13, std::to_string(exact) + "/13 identities with zero residual");
  o.require(elapsed < 10.0, "suite time " + num(elapsed) + " s < 10 s");
  return o;
}

Outcome disk_expansion() {
  Outcome o;
  DiffOp residual = models::disk_hamiltonian_expanded() - models::disk_hamiltonian_printed();
  if (residual.is_zero()) {
    o.require(true, "empty diff");
    return o;
  }
  bool multiplicative = residual.order() == 0;
  bool b_squared = multiplicative;
  if (multiplicative) {
    auto t = residual.symbols();
    std::size_t b = t->index_of("B");
    auto c = residual.coefficient(opalg::MultiIndex(t->coordinates().size(), 0));
    for (const auto& [e, coeff] : c.num().terms()) b_squared = b_squared && e[b] == 2;
  }
  o.require(multiplicative, "diff has no derivative terms");
  o.require(b_squared, "every diff term is proportional to B^2");

  models::IdentityReport report;
  for (const auto& r : models::run_identity_suite()) {
    if (r.name == "disk-expansion") report = r;
  }
  std::string shown = report.rendered();
  o.require(report.status == models::Status::DocumentedDiff && shown.find("diff: B^2 term") != std::string::npos,
            "report renders the B^2 diff");
  return o;
}

Outcome oracle_cross_check() {
  Outcome o;
  auto start = Clock::now();
  numverify::FDGrid coarse{1e-3, 80.0, 16000}, fine{1e-3, 80.0, 32000};
  auto a = numverify::whittaker_oracle(5.0, coarse, 5);
  auto b = numverify::whittaker_oracle(5.0, fine, 5);
  double elapsed = seconds_since(start);

  double worst = 0;
  for (double e : a.relerr) worst = std::max(worst, e);
  o.require(a.energies.size() == 5 && worst <= 1e-3, "5 levels, max relerr " + num(worst) + " <= 1e-3");
  std::string ratios;
  bool in_band = true;
  for (std::size_t l = 0; l < a.relerr.size(); ++l) {
    double ratio = a.relerr[l] / b.relerr[l];
    in_band = in_band && ratio >= 3.0 && ratio <= 5.0;
    ratios += (l ? "," : "") + num(ratio, "%.2f");
  }
  o.require(in_band, "refinement ratios {" + ratios + "} in [3,5]");
  o.require(elapsed < 60.0, "time " + num(elapsed) + " s < 60 s");
  return o;
}

Outcome eigenfunction_residual() {
  Outcome o;
  DiffOp H = models::hamiltonian_halfplane();
  numverify::Bindings params{{"beta", 5.0}, {"a", 1.0}, {"m", 1.0}};
  std::vector<std::vector<double>> points;
  for (int i = 0; i < 20; ++i) points.push_back({0.37 * i - 2.0, 0.1 * std::pow(100.0, i / 19.0)});

  double worst = 0, control = 0;
  for (double c : {0.5, 2.0}) {
    numverify::StepRule step = [c](std::span<const double> p) { return 2e-3 * std::min(p[1], 1.0 / c); };
    for (long l = 0; l < 5; ++l) {
      numverify::Field psi = [=](std::span<const double> p) {
        return spectra::eigenfunction_halfplane(5.0, l, c, p[0], p[1]);
      };
      double E = spectra::landau_halfplane(5, l).energy;
      worst = std::max(worst, numverify::residual_check(H, params, psi, E, points, step));
      control = std::max(control, numverify::residual_check(H, params, psi, E + 1.0, points, step));
    }
  }
  o.require(worst <= 1e-6, "max residual " + num(worst) + " <= 1e-6 (c = 0.5, 2; l = 0..4)");
  o.require(control >= 0.1, "negative control " + num(control) + " >= 0.1");
  return o;
}

Outcome flat_geometry() {
  Outcome o;
  bool exact = true;
  for (const auto& [w, hbar] : {std::pair{mpq_class(1), mpq_class(1)}, {mpq_class(3, 7), mpq_class(5, 3)}}) {
    for (long n = 0; n <= 10; ++n) {
      auto line = spectra::landau_flat(n, w, hbar);
      mpq_class want = (mpq_class(n) + mpq_class(1, 2)) * hbar * w;
      exact = exact && line.energy_exact && *line.energy_exact == want;
    }
  }
  o.require(exact, "E_n = (n + 1/2) hbar omega_c exact for n = 0..10");

  double hbar = 1.0, m = 1.3, w = 0.8;
  double z0 = std::sqrt(hbar / (m * w));
  DiffOp annihilator = models::flat_to_real(models::ground_state_annihilator());
  numverify::Bindings params{{"hbar", hbar}, {"m", m}, {"omega_c", w}};
  numverify::Field psi = [z0](std::span<const double> p) {
    return spectra::ground_state_flat({p[0], p[1]}, z0);
  };
  double worst = 0;
  for (int i = 0; i < 10; ++i) {
    std::vector<double> p{1.5 * std::cos(0.9 * i), 1.2 * std::sin(1.3 * i + 0.4)};
    worst = std::max(worst, std::abs(numverify::fd_apply(annihilator, params, psi, p, 1e-3)));
  }
  o.require(worst <= 1e-8, "annihilation residual " + num(worst) + " <= 1e-8 at 10 points");
  return o;
}

Outcome classical_dynamics() {
  Outcome o;
  classical::PhaseState s0{0, 1, 1, -2, 0};
  double period = classical::orbit_period(s0, 1, 4);
  long steps = 10 * 1000;
  auto traj = classical::integrate_rk4(s0, 1, 4, 10 * period / steps, steps);
  auto drift = classical::conserved_drift(traj);
  o.require(!traj.domain_exit && drift.max() <= 1e-8, "drift " + num(drift.max()) + " <= 1e-8 over 10 periods");
  auto fit = classical::circle_fit(traj);
  o.require(fit.rms / fit.r <= 1e-6, "circle rms/r " + num(fit.rms / fit.r) + " <= 1e-6");
  double order = classical::convergence_order(s0, 1, 4, period, {8e-3, 4e-3, 2e-3, 1e-3});
  o.require(order >= 3.7 && order <= 4.3, "RK4 order " + num(order, "%.2f") + " in [3.7,4.3]");
  return o;
}

Outcome curvature() {
  Outcome o;
  const double step = 1e-3;
  for (double a : {1.0, 2.0}) {
    auto metric = geometry::make_metric(geometry::MetricKind::HalfPlane, a);
    double err = std::abs(geometry::scalar_curvature_fd(metric, {0.3, 1.2}, step) + 2.0 / (a * a));
    o.require(err <= 10 * step * step, "a=" + num(a) + " error " + num(err) + " <= 10 step^2");
    double e1 = std::abs(geometry::scalar_curvature_fd(metric, {0.3, 1.2}, 4e-2) + 2.0 / (a * a));
    double e2 = std::abs(geometry::scalar_curvature_fd(metric, {0.3, 1.2}, 2e-2) + 2.0 / (a * a));
    double order = std::log2(e1 / e2);
    o.require(order >= 1.8 && order <= 2.2, "order " + num(order, "%.2f"));
  }
  return o;
}

Outcome many_body() {
  Outcome o;
  std::mt19937 rng(2024);
  std::normal_distribution<double> g(0.0, 1.2);
  auto random_config = [&](std::size_t n) {
    manybody::ParticleConfig cfg{{}, 1.0};
    for (std::size_t i = 0; i < n; ++i) cfg.points.emplace_back(g(rng), g(rng));
    return cfg;
  };

  double spread = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<unsigned> orbitals(n);
    for (std::size_t i = 0; i < n; ++i) orbitals[i] = static_cast<unsigned>(i);
    std::vector<Complex> ratios;
    for (int k = 0; k < 20; ++k) {
      auto cfg = random_config(n);
      ratios.push_back(manybody::laughlin(cfg, 1) / manybody::slater_lll(cfg, orbitals));
    }
    for (auto r : ratios) spread = std::max(spread, std::abs(r - ratios[0]) / std::abs(ratios[0]));
  }
  o.require(spread <= 1e-10, "laughlin(m=1)/slater spread " + num(spread) + " <= 1e-10");

  double slater_flip = 0, laughlin_flip = 0;
  for (int k = 0; k < 20; ++k) {
    auto cfg = random_config(3 + k % 3);
    std::vector<unsigned> orbitals{0, 1, 2, 3, 4};
    orbitals.resize(cfg.points.size());
    auto swapped = cfg;
    std::swap(swapped.points[0], swapped.points.back());
    Complex d = manybody::slater_lll(cfg, orbitals);
    slater_flip = std::max(slater_flip, std::abs(manybody::slater_lll(swapped, orbitals) + d) / std::abs(d));
    Complex v = manybody::laughlin(cfg, 3);
    laughlin_flip = std::max(laughlin_flip, std::abs(manybody::laughlin(swapped, 3) + v) / std::abs(v));
  }
  o.require(slater_flip <= 1e-13, "determinant negates under exchange (rel " + num(slater_flip) + ")");
  o.require(laughlin_flip <= 1e-13, "Laughlin m=3 negates under exchange (rel " + num(laughlin_flip) + ")");
  o.require(manybody::filling_quantized(3, 9) == mpq_class(1, 3), "nu(3, 9) = 1/3 exactly");
  return o;
}

Outcome special_functions() {
  Outcome o;
  double worst = 0;
  for (unsigned n = 0; n <= 10; ++n) {
    for (double tau : {0.0, 0.5, 3.0}) {
      for (double z = 0.0; z <= 20.0; z += 0.5) {
        double lhs = specfun::laguerre(n, tau, z);
        double rhs = specfun::pochhammer(tau + 1, n) / boost::math::factorial<double>(n) *
                     specfun::hyp1f1(-double(n), tau + 1, z).value;
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
      }
    }
  }
  o.require(worst <= 1e-12, "Laguerre-1F1 " + num(worst) + " <= 1e-12");

  double kummer = 0;
  for (double a : {-1.5, 0.2, 1.0, 2.5}) {
    for (double b : {0.5, 1.5, 4.0}) {
      for (double z : {-6.0, -2.0, -0.5, 0.5, 2.0, 6.0}) {
        double lhs = specfun::hyp1f1(a, b, z).value;
        double rhs = std::exp(z) * specfun::hyp1f1(b - a, b, -z).value;
        kummer = std::max(kummer, std::abs(lhs - rhs) / std::abs(lhs));
      }
    }
  }
  o.require(kummer <= 1e-10, "Kummer reflection " + num(kummer) + " <= 1e-10");

  double slope_err = 0;
  for (double beta : {2.0, 5.0}) {
    for (double n : {0.5, 1.5, 3.2}) {
      double s1 = 1e-4, s2 = 1e-5;
      double slope = std::log(specfun::whittaker_m(beta, n, s1) / specfun::whittaker_m(beta, n, s2)) / std::log(10.0);
      slope_err = std::max(slope_err, std::abs(slope - (0.5 + n)));
    }
  }
  o.require(slope_err <= 1e-3, "Whittaker small-s slope error " + num(slope_err) + " <= 1e-3");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"identity suite", identity_suite},
      {"disk expansion", disk_expansion},
      {"spectrum oracle", oracle_cross_check},
      {"eigenfunction residual", eigenfunction_residual},
      {"flat geometry", flat_geometry},
      {"classical dynamics", classical_dynamics},
      {"curvature", curvature},
      {"many-body", many_body},
      {"special functions", special_functions},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
