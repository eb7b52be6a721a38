// qhall: command-line front end for the identity suite and the numerical
// checks. Data goes to stdout (or --out), diagnostics to stderr.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "cli_support.hpp"
#include "qhall/classical.hpp"
#include "qhall/errors.hpp"
#include "qhall/manybody.hpp"
#include "qhall/models.hpp"
#include "qhall/numverify.hpp"
#include "qhall/spectra.hpp"

using namespace qhall;
using cli::UsageError;

namespace {

struct Output {
  std::string path;

  void write(const std::string& data) const {
    if (path.empty()) {
      std::cout << data;
      return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << data;
  }
};

std::string fmt(double v) {
  if (v == 0) v = 0;
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string format = "text";
  bool strict = false;
  bool details = false;
  Output out;
};

int run_verify(const VerifyArgs& args) {
  auto reports = models::run_identity_suite();
  args.out.write(args.format == "json" ? models::render_json(reports) + "\n"
                                       : models::render_text(reports, args.details));
  bool failed = false, documented = false;
  for (const auto& r : reports) {
    failed |= r.status == models::Status::Fail;
    documented |= r.status == models::Status::DocumentedDiff;
  }
  if (failed) return cli::kStrictFailure;
  if (args.strict && documented) {
    std::cerr << "verify --strict: documented differences count as failures\n";
    return cli::kStrictFailure;
  }
  return cli::kOk;
}

// ---------------------------------------------------------------------------

struct SpectrumArgs {
  std::string geometry;
  std::string format = "csv";
  std::string hbar = "1", omega_c = "1", n = "0..4";
  std::string beta, m = "1", a = "1", levels = "all";
  std::string k = "0", rho = "1", l = "0..4";
  Output out;
};

int run_spectrum(const SpectrumArgs& args) {
  using spectra::Geometry;
  std::vector<spectra::SpectrumLine> lines;
  std::vector<std::pair<std::string, double>> params;
  Geometry g;

  if (args.geometry == "flat") {
    g = Geometry::Flat;
    auto hbar = cli::parse_rational(args.hbar), w = cli::parse_rational(args.omega_c);
    auto range = cli::parse_range(args.n);
    for (long n = range.first; n <= range.last; ++n) lines.push_back(spectra::landau_flat(n, w, hbar));
    params = {{"hbar", hbar.get_d()}, {"omega_c", w.get_d()}};
  } else if (args.geometry == "halfplane") {
    g = Geometry::HalfPlane;
    if (args.beta.empty()) throw UsageError("--beta is required for the half-plane");
    auto beta = cli::parse_rational(args.beta), m = cli::parse_rational(args.m), a = cli::parse_rational(args.a);
    if (sgn(beta) <= 0) throw UsageError("--beta must be positive");
    cli::IntRange range{0, spectra::halfplane_level_count(beta) - 1};
    if (args.levels != "all") range = cli::parse_range(args.levels);
    for (long l = range.first; l <= range.last; ++l) lines.push_back(spectra::landau_halfplane(beta, l, m, a));
    params = {{"beta", beta.get_d()}, {"m", m.get_d()}, {"a", a.get_d()}};
  } else if (args.geometry == "sphere") {
    g = Geometry::Sphere;
    auto k = cli::parse_rational(args.k), rho = cli::parse_rational(args.rho);
    auto range = cli::parse_range(args.l);
    for (long l = range.first; l <= range.last; ++l) lines.push_back(spectra::sphere_spectrum(l, k, rho));
    params = {{"k", k.get_d()}, {"rho", rho.get_d()}};
  } else {
    throw UsageError("--geometry must be flat, halfplane or sphere");
  }

  if (args.format == "json") {
    args.out.write(spectra::to_json(g, params, lines) + "\n");
    return cli::kOk;
  }
  std::string meta = "# geometry=" + spectra::to_string(g);
  for (const auto& [key, v] : params) meta += " " + key + "=" + fmt(v);
  args.out.write(meta + "\n" + spectra::to_csv(lines));
  return cli::kOk;
}

// ---------------------------------------------------------------------------

struct TrajectoryArgs {
  std::string preset;
  double x = 0, y = 1, px = 0, py = 0;
  double beta = 0, a = 1;
  std::optional<double> dt;
  std::optional<long> steps;
  Output out;
};

int run_trajectory(TrajectoryArgs args) {
  if (args.preset == "bounded") {
    args.x = 1;
    args.y = 1;
    args.px = -2;
    args.py = 0;
    args.beta = 4;
    args.a = 1;
  } else if (!args.preset.empty()) {
    throw UsageError("unknown preset '" + args.preset + "'");
  }
  if (!(args.y > 0)) throw UsageError("--y must be positive (the orbit lives in y > 0)");
  if (!(args.a > 0)) throw UsageError("--a must be positive");

  classical::PhaseState s0{0, args.x, args.y, args.px, args.py};
  double dt = args.dt.value_or(1e-3);
  long steps = args.steps.value_or(1000);
  if (args.preset == "bounded") {
    double period = classical::orbit_period(s0, args.a, args.beta);
    if (!args.dt) dt = period / 1000;
    if (!args.steps) steps = std::lround(10 * period / dt);
  }
  if (!(dt > 0)) throw UsageError("--dt must be positive");
  if (steps < 0) throw UsageError("--steps must be nonnegative");

  auto traj = classical::integrate_rk4(s0, args.a, args.beta, dt, steps);
  std::string meta = "# beta=" + fmt(args.beta) + " a=" + fmt(args.a) + " dt=" + fmt(dt) +
                     " steps=" + std::to_string(steps) + "\n";
  args.out.write(meta + classical::to_csv(traj));

  auto drift = classical::conserved_drift(traj);
  std::cerr << "# relative drift H=" << drift.H << " L1=" << drift.L1 << " L2=" << drift.L2 << " L3=" << drift.L3
            << "\n";
  if (traj.domain_exit) {
    std::cerr << "trajectory reached y <= 0 after t = " << fmt(traj.states.back().t) << "; output is partial\n";
    return cli::kNumerical;
  }
  return cli::kOk;
}

// ---------------------------------------------------------------------------

struct EigenfunctionArgs {
  double beta = 0, c = 1;
  long l = 0;
  std::vector<double> xs{0.0};
  std::vector<double> ys;
  Output out;
};

int run_eigenfunction(const EigenfunctionArgs& args) {
  std::string data = "# beta=" + fmt(args.beta) + " l=" + std::to_string(args.l) + " c=" + fmt(args.c) + "\n";
  data += "x,y,re,im,abs\n";
  for (double y : args.ys) {
    for (double x : args.xs) {
      auto psi = spectra::eigenfunction_halfplane(args.beta, args.l, args.c, x, y);
      data += fmt(x) + "," + fmt(y) + "," + fmt(psi.real()) + "," + fmt(psi.imag()) + "," + fmt(std::abs(psi)) + "\n";
    }
  }
  args.out.write(data);
  return cli::kOk;
}

// ---------------------------------------------------------------------------

struct OracleArgs {
  double beta = 0, smin = 1e-3, smax = 80, m = 1, a = 1;
  int points = 16000;
  std::optional<int> levels;
  Output out;
};

int run_oracle(const OracleArgs& args) {
  if (!(args.beta > 0.5)) throw UsageError("--beta must exceed 1/2");
  numverify::FDGrid grid{args.smin, args.smax, args.points};
  int levels = args.levels.value_or(static_cast<int>(spectra::halfplane_level_count(args.beta)));
  auto result = numverify::whittaker_oracle(args.beta, grid, levels, args.m, args.a);
  args.out.write(result.to_json() + "\n");
  return cli::kOk;
}

// ---------------------------------------------------------------------------

struct LaughlinArgs {
  int m = 1;
  std::string config;
  Output out;
};

int run_laughlin(const LaughlinArgs& args) {
  auto cfg = manybody::load_config(args.config);
  auto value = manybody::laughlin(cfg, args.m);
  std::string data = "# N=" + std::to_string(cfg.points.size()) + " m=" + std::to_string(args.m) +
                     " z0=" + fmt(cfg.z0) + "\n";
  data += "re,im,abs\n" + fmt(value.real()) + "," + fmt(value.imag()) + "," + fmt(std::abs(value)) + "\n";

  int code = cli::kOk;
  if (cfg.points.size() < 2) {
    data += "antisymmetry: n/a (single particle)\n";
  } else {
    auto swapped = cfg;
    std::swap(swapped.points[0], swapped.points[1]);
    auto other = manybody::laughlin(swapped, args.m);
    double sign = args.m % 2 ? -1.0 : 1.0;
    bool ok = std::abs(other - sign * value) <= 1e-12 * std::abs(value);
    data += std::string("antisymmetry: ") + (ok ? "PASS" : "FAIL") + "\n";
    if (!ok) code = cli::kNumerical;
  }
  args.out.write(data);
  return code;
}

int numerical_or_usage(const qhall::Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  if (dynamic_cast<const DomainError*>(&e) || dynamic_cast<const NoBoundStateError*>(&e) ||
      dynamic_cast<const NonNormalizableError*>(&e) || dynamic_cast<const DeclarationError*>(&e)) {
    return cli::kUsage;
  }
  return cli::kNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact operator identities and numerical checks for Landau problems on flat and hyperbolic geometries"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the exact identity suite");
  v->add_option("--format", verify.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  v->add_flag("--strict", verify.strict, "Count documented differences as failures");
  v->add_flag("--details", verify.details, "Print every residual and supporting note");
  v->add_option("--out", verify.out.path, "Write to this file instead of stdout");

  SpectrumArgs spectrum;
  auto* sp = app.add_subcommand("spectrum", "Closed-form energy levels");
  sp->add_option("--geometry", spectrum.geometry, "flat, halfplane or sphere")->required();
  sp->add_option("--format", spectrum.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sp->add_option("--hbar", spectrum.hbar, "flat: hbar")->capture_default_str();
  sp->add_option("--omega-c", spectrum.omega_c, "flat: cyclotron frequency")->capture_default_str();
  sp->add_option("--n", spectrum.n, "flat: level or range a..b")->capture_default_str();
  sp->add_option("--beta", spectrum.beta, "halfplane: rescaled field");
  sp->add_option("--m", spectrum.m, "halfplane: mass")->capture_default_str();
  sp->add_option("--a", spectrum.a, "halfplane: curvature radius")->capture_default_str();
  sp->add_option("--levels", spectrum.levels, "halfplane: 'all' or a range a..b")->capture_default_str();
  sp->add_option("--k", spectrum.k, "sphere: monopole number k = B rho^2 / 2")->capture_default_str();
  sp->add_option("--rho", spectrum.rho, "sphere: radius")->capture_default_str();
  sp->add_option("--l", spectrum.l, "sphere: level or range a..b")->capture_default_str();
  sp->add_option("--out", spectrum.out.path, "Write to this file instead of stdout");

  TrajectoryArgs traj;
  auto* tr = app.add_subcommand("trajectory", "Integrate the classical half-plane orbit (RK4)");
  tr->add_option("--preset", traj.preset, "'bounded': beta=4, a=1, start (1, 1, -2, 0), 10 periods");
  tr->add_option("--x", traj.x, "initial x")->capture_default_str();
  tr->add_option("--y", traj.y, "initial y (> 0)")->capture_default_str();
  tr->add_option("--px", traj.px, "initial p_x")->capture_default_str();
  tr->add_option("--py", traj.py, "initial p_y")->capture_default_str();
  tr->add_option("--beta", traj.beta, "rescaled field")->capture_default_str();
  tr->add_option("--a", traj.a, "curvature radius")->capture_default_str();
  tr->add_option("--dt", traj.dt, "time step (default 1e-3, or period/1000 with the preset)");
  tr->add_option("--steps", traj.steps, "number of steps (default 1000, or 10 periods with the preset)");
  tr->add_option("--out", traj.out.path, "Write the CSV to this file instead of stdout");

  EigenfunctionArgs eig;
  auto* ef = app.add_subcommand("eigenfunction", "Sample the closed-form half-plane eigenfunction");
  ef->add_option("--beta", eig.beta, "rescaled field")->required();
  ef->add_option("--l", eig.l, "level, 0 <= l < beta - 1/2")->capture_default_str();
  ef->add_option("--c", eig.c, "separation constant (> 0)")->capture_default_str();
  ef->add_option("--x", eig.xs, "x values (comma separated)")->delimiter(',')->capture_default_str();
  ef->add_option("--y", eig.ys, "y values (comma separated)")->delimiter(',')->required();
  ef->add_option("--out", eig.out.path, "Write to this file instead of stdout");

  OracleArgs oracle;
  auto* orc = app.add_subcommand("oracle", "Finite-difference Whittaker eigenvalues against the closed form");
  orc->add_option("--beta", oracle.beta, "rescaled field (> 1/2)")->required();
  orc->add_option("--smin", oracle.smin, "left end of the grid")->capture_default_str();
  orc->add_option("--smax", oracle.smax, "right end of the grid")->capture_default_str();
  orc->add_option("--points", oracle.points, "interior grid points")->capture_default_str();
  orc->add_option("--levels", oracle.levels, "number of levels (default: all bound levels)");
  orc->add_option("--m", oracle.m, "mass")->capture_default_str();
  orc->add_option("--a", oracle.a, "curvature radius")->capture_default_str();
  orc->add_option("--out", oracle.out.path, "Write to this file instead of stdout");

  LaughlinArgs laugh;
  auto* la = app.add_subcommand("laughlin", "Evaluate the Laughlin wavefunction for a particle configuration");
  la->add_option("--m", laugh.m, "exponent m >= 1")->required();
  la->add_option("--config", laugh.config, "JSON file {\"z0\": r, \"points\": [[re, im], ...]}")->required();
  la->add_option("--out", laugh.out.path, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  try {
    if (*v) return run_verify(verify);
    if (*sp) return run_spectrum(spectrum);
    if (*tr) return run_trajectory(traj);
    if (*ef) return run_eigenfunction(eig);
    if (*orc) return run_oracle(oracle);
    if (*la) return run_laughlin(laugh);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return cli::kUsage;
  } catch (const qhall::Error& e) {
    return numerical_or_usage(e);
  }
  return cli::kUsage;
}
