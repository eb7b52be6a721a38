#include <stdexcept>

#include "qhall/errors.hpp"
#include "qhall/models.hpp"

namespace qhall::models {

using geometry::MetricKind;
using opalg::GaussianRational;
using opalg::Symbol;
using opalg::SymbolKind;
using opalg::SymbolTable;

namespace {

const GaussianRational I = GaussianRational::i();

GaussianRational q(long n, long d = 1) { return GaussianRational::fraction(n, d); }

struct Builder {
  SymbolTablePtr t;
  RationalFunc operator()(const char* name, int power = 1) const { return RationalFunc::symbol(t, name, power); }
  RationalFunc c(const GaussianRational& v) const { return RationalFunc::constant(t, v); }
  DiffOp d(const char* name, int order = 1) const { return DiffOp::derivative(t, name, order); }
  DiffOp op(const RationalFunc& f) const { return DiffOp(f); }
};

Builder halfplane() { return {geometry::symbols_for(MetricKind::HalfPlane)}; }

// 1/(2 m a^2) over the given table.
RationalFunc halfplane_prefactor(const Builder& b) {
  return b("m", -1) * b("a", -2) * q(1, 2);
}

}  // namespace

// ---------------------------------------------------------------------------

PhaseSpacePtr halfplane_phase_space() {
  static const PhaseSpacePtr space =
      opalg::PhaseSpace::make({"x", "y"}, {"px", "py"}, {"beta", "a"}, {"y", "a"});
  return space;
}

SymbolTablePtr halfplane_complex_symbols() {
  static const SymbolTablePtr table = SymbolTable::make({
      {"z", SymbolKind::Coordinate, false},
      {"zb", SymbolKind::Coordinate, false},
      {"beta", SymbolKind::Parameter, false},
      {"a", SymbolKind::Parameter, true},
      {"m", SymbolKind::Parameter, true},
  });
  return table;
}

namespace {

std::vector<SymbolTable::RuleSpec> kappa_rule() {
  return {{"kappa", q(1, 2), {{"hbar", 1}, {"m", -1}, {"omega_c", -1}}}};
}

}  // namespace

SymbolTablePtr flat_complex_symbols() {
  static const SymbolTablePtr table = SymbolTable::make(
      {
          {"z", SymbolKind::Coordinate, false},
          {"zb", SymbolKind::Coordinate, false},
          {"hbar", SymbolKind::Parameter, true},
          {"m", SymbolKind::Parameter, true},
          {"omega_c", SymbolKind::Parameter, true},
          {"kappa", SymbolKind::Parameter, false},
      },
      kappa_rule());
  return table;
}

SymbolTablePtr flat_real_symbols() {
  static const SymbolTablePtr table = SymbolTable::make(
      {
          {"x", SymbolKind::Coordinate, false},
          {"y", SymbolKind::Coordinate, false},
          {"hbar", SymbolKind::Parameter, true},
          {"m", SymbolKind::Parameter, true},
          {"omega_c", SymbolKind::Parameter, true},
          {"kappa", SymbolKind::Parameter, false},
      },
      kappa_rule());
  return table;
}

SymbolTablePtr sphere_symbols() {
  static const SymbolTablePtr table = SymbolTable::make({
      {"x", SymbolKind::Coordinate, false},
      {"y", SymbolKind::Coordinate, true},
      {"beta", SymbolKind::Parameter, false},
      {"a", SymbolKind::Parameter, true},
      {"m", SymbolKind::Parameter, true},
      {"rho", SymbolKind::Parameter, true},
  });
  return table;
}

// ---------------------------------------------------------------------------
// Classical sector

std::string to_string(ChargeCandidate c) {
  return c == ChargeCandidate::PrintedPy ? "L2 = p_y" : "L2 = p_x";
}

std::array<PhasePoly, 3> classical_generators(ChargeCandidate candidate) {
  auto s = halfplane_phase_space();
  auto v = [&](const char* n) { return PhasePoly::symbol(s, n); };
  PhasePoly x = v("x"), y = v("y"), px = v("px"), py = v("py"), beta = v("beta");
  PhasePoly L1 = x * px + y * py;
  PhasePoly L2 = candidate == ChargeCandidate::PrintedPy ? py : px;
  PhasePoly L3 = (y * y - x * x) * px - q(2) * x * y * py + q(2) * beta * y;
  return {L1, L2, L3};
}

PhasePoly classical_hamiltonian() {
  auto s = halfplane_phase_space();
  auto v = [&](const char* n) { return PhasePoly::symbol(s, n); };
  PhasePoly y = v("y"), px = v("px"), py = v("py"), beta = v("beta");
  PhasePoly inv_4a2 = PhasePoly::symbol(s, "a", -2) * q(1, 4);
  return inv_4a2 * (y * y * (px * px + py * py) + q(2) * beta * y * px + beta * beta);
}

bool BracketResiduals::closes() const {
  for (const auto& r : residuals) {
    if (!r.is_zero()) return false;
  }
  return true;
}

BracketResiduals sl2_bracket_residuals(ChargeCandidate candidate) {
  auto [L1, L2, L3] = classical_generators(candidate);
  return {candidate,
          {opalg::poisson_bracket(L1, L2) - L2, opalg::poisson_bracket(L1, L3) + L3,
           opalg::poisson_bracket(L2, L3) - q(2) * L1}};
}

ChargeCandidate determine_charge_assignment() {
  bool printed = sl2_bracket_residuals(ChargeCandidate::PrintedPy).closes();
  bool translation = sl2_bracket_residuals(ChargeCandidate::TranslationPx).closes();
  if (printed == translation) {
    throw Error("charge assignment is ambiguous: both or neither candidate closes the algebra");
  }
  return printed ? ChargeCandidate::PrintedPy : ChargeCandidate::TranslationPx;
}

// ---------------------------------------------------------------------------
// Quantum half-plane

std::array<DiffOp, 3> quantum_generators() {
  Builder b = halfplane();
  RationalFunc x = b("x"), y = b("y"), beta = b("beta");
  DiffOp L1 = -I * (b.op(x) * b.d("x") + b.op(y) * b.d("y"));
  DiffOp L2 = -I * b.d("x");
  DiffOp L3 = -I * b.op(y * y - x * x) * b.d("x") + b.op(q(2) * I * x * y) * b.d("y")
              + b.op(q(2) * beta * y);
  return {L1, L2, L3};
}

std::array<DiffOp, 3> quantum_generators_ordered() {
  Builder b = halfplane();
  RationalFunc x = b("x"), y = b("y"), beta = b("beta");
  DiffOp py = -I * b.d("y") + b.op(I * b("y", -1));
  DiffOp L1 = -I * b.d("x") * b.op(x) + b.op(y) * py;
  DiffOp L2 = -I * b.d("x");
  DiffOp L3 = -I * b.d("x") * b.op(y * y - x * x) - b.op(q(2) * x * y) * py + b.op(q(2) * beta * y);
  return {L1, L2, L3};
}

std::array<DiffOp, 3> su11_basis() {
  auto [L1, L2, L3] = quantum_generators();
  return {(L2 - L3) * q(1, 2), (L2 + L3) * q(1, 2), L1};
}

DiffOp casimir() {
  auto [J0, J1, J2] = su11_basis();
  return J0 * J0 - J1 * J1 - J2 * J2;
}

DiffOp casimir_from_generators() {
  auto [L1, L2, L3] = quantum_generators();
  return -(L2 * L3) - L1 * L1 + I * L1;
}

DiffOp hamiltonian_halfplane() {
  Builder b = halfplane();
  RationalFunc y = b("y"), beta = b("beta");
  return b.op(halfplane_prefactor(b))
         * (b.op(-(y * y)) * (b.d("x", 2) + b.d("y", 2)) + b.op(q(-2) * I * beta * y) * b.d("x")
            + b.op(beta * beta));
}

DiffOp hamiltonian_halfplane_sandwich() {
  Builder b = halfplane();
  return geometry::laplace_beltrami(geometry::make_metric(MetricKind::HalfPlane), geometry::halfplane_gauge(),
                                    b("m"), geometry::Ordering::Sandwich);
}

DiffOp hamiltonian_halfplane_metric_right() {
  Builder b = halfplane();
  return geometry::laplace_beltrami(geometry::make_metric(MetricKind::HalfPlane), geometry::halfplane_gauge(),
                                    b("m"), geometry::Ordering::MetricRight);
}

DiffOp halfplane_to_complex(const DiffOp& op) {
  opalg::require_same(op.symbols(), geometry::symbols_for(MetricKind::HalfPlane));
  Builder c{halfplane_complex_symbols()};
  RationalFunc z = c("z"), zb = c("zb");
  // x = (z + zb)/2, y = (z - zb)/(2i); parameters map to themselves.
  std::vector<RationalFunc> images{(z + zb) * q(1, 2), (z - zb) * (-I * q(1, 2)), c("beta"), c("a"), c("m")};
  // d_x = d + db, d_y = i (d - db).
  std::vector<DiffOp> derivatives{c.d("z") + c.d("zb"), I * (c.d("z") - c.d("zb"))};
  return opalg::change_variables(op, c.t, images, derivatives);
}

DiffOp hamiltonian_halfplane_complex() {
  Builder c{halfplane_complex_symbols()};
  RationalFunc diff = c("z") - c("zb");
  RationalFunc beta = c("beta");
  RationalFunc pref = c("m", -1) * c("a", -2) * q(1, 2);
  return c.op(pref)
         * (c.op(diff * diff) * c.d("zb") * c.d("z") - c.op(beta * diff) * (c.d("z") + c.d("zb"))
            + c.op(beta * beta));
}

// ---------------------------------------------------------------------------
// Flat plane

std::array<DiffOp, 2> ladder_operators() {
  Builder f{flat_complex_symbols()};
  RationalFunc pref = q(-2) * I * f("kappa");
  RationalFunc shift = f("m") * f("omega_c") * f("hbar", -1) * q(1, 4);
  DiffOp a = f.op(pref) * (f.d("zb") + f.op(shift * f("z")));
  DiffOp a_dag = f.op(pref) * (f.d("z") - f.op(shift * f("zb")));
  return {a, a_dag};
}

DiffOp hamiltonian_flat_complex() {
  Builder f{flat_complex_symbols()};
  RationalFunc hbar = f("hbar"), m = f("m"), w = f("omega_c"), z = f("z"), zb = f("zb");
  return f.op(q(-2) * hbar * hbar / m) * f.d("z") * f.d("zb")
         - f.op(hbar * w * q(1, 2)) * (f.op(z) * f.d("z") - f.op(zb) * f.d("zb"))
         + f.op(m * w * w * z * zb * q(1, 8));
}

DiffOp ground_state_annihilator() {
  Builder f{flat_complex_symbols()};
  return f.d("zb") + f.op(f("m") * f("omega_c") * f("hbar", -1) * q(1, 4) * f("z"));
}

DiffOp flat_to_real(const DiffOp& op) {
  opalg::require_same(op.symbols(), flat_complex_symbols());
  Builder r{flat_real_symbols()};
  RationalFunc x = r("x"), y = r("y");
  std::vector<RationalFunc> images{x + I * y, x - I * y, r("hbar"), r("m"), r("omega_c"), r("kappa")};
  std::vector<DiffOp> derivatives{(r.d("x") - I * r.d("y")) * q(1, 2), (r.d("x") + I * r.d("y")) * q(1, 2)};
  return opalg::change_variables(op, r.t, images, derivatives);
}

// ---------------------------------------------------------------------------
// Disk

DiffOp disk_hamiltonian_printed() {
  Builder b{geometry::symbols_for(MetricKind::Disk)};
  RationalFunc phi = geometry::disk_phi();
  RationalFunc x = b("x"), y = b("y"), B = b("B");
  RationalFunc inv_rho2 = b("rho", -2);
  RationalFunc w2 = x * x + y * y;
  DiffOp bracket = b.op(-phi) * (b.d("x", 2) + b.d("y", 2))
                   - b.op(q(4) * inv_rho2) * (b.op(x) * b.d("x") + b.op(y) * b.d("y"))
                   + b.op(q(2) * I * B * phi) * (b.op(y) * b.d("x") - b.op(x) * b.d("y"))
                   + b.op(B * B * phi)
                   - b.op(q(4) * inv_rho2 * (b.c(1) + q(2) * w2 * inv_rho2 / phi));
  return b.op(phi / b("m") * q(1, 2)) * bracket;
}

DiffOp disk_hamiltonian_expanded() {
  Builder b{geometry::symbols_for(MetricKind::Disk)};
  return geometry::laplace_beltrami(geometry::make_metric(MetricKind::Disk), geometry::disk_gauge(), b("m"),
                                    geometry::Ordering::Divergence);
}

}  // namespace qhall::models
