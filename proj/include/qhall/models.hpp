#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "qhall/geometry.hpp"
#include "qhall/opalg.hpp"

namespace qhall::models {

using opalg::DiffOp;
using opalg::PhasePoly;
using opalg::PhaseSpacePtr;
using opalg::RationalFunc;
using opalg::SymbolTablePtr;

// ---------------------------------------------------------------------------
// Symbol tables

/// x, y, px, py with parameters beta, a; y and a may carry negative powers.
PhaseSpacePtr halfplane_phase_space();
/// z, zb over the half-plane parameters beta, a, m.
SymbolTablePtr halfplane_complex_symbols();
/// z, zb; hbar, m, omega_c, kappa with kappa^2 = hbar / (2 m omega_c).
SymbolTablePtr flat_complex_symbols();
/// x, y with the same parameters as flat_complex_symbols().
SymbolTablePtr flat_real_symbols();
/// Half-plane symbols plus the sphere radius rho.
SymbolTablePtr sphere_symbols();

// ---------------------------------------------------------------------------
// Classical sector

/// The translation charge in the Noether triple is printed as p_y but the
/// bracket table only closes with p_x; both readings are kept.
enum class ChargeCandidate { PrintedPy, TranslationPx };

std::string to_string(ChargeCandidate c);

/// L1 = x px + y py, L2 = p_y or p_x, L3 = (y^2 - x^2) px - 2xy py + 2 beta y.
std::array<PhasePoly, 3> classical_generators(ChargeCandidate candidate);

/// H = (1/4a^2) [ y^2 (px^2 + py^2) + 2 beta y px + beta^2 ].
PhasePoly classical_hamiltonian();

struct BracketResiduals {
  ChargeCandidate candidate;
  /// {L1,L2} - L2, {L1,L3} + L3, {L2,L3} - 2 L1.
  std::array<PhasePoly, 3> residuals;
  bool closes() const;
};

BracketResiduals sl2_bracket_residuals(ChargeCandidate candidate);

/// The unique candidate whose brackets close; throws qhall::Error when zero
/// or two candidates close.
ChargeCandidate determine_charge_assignment();

// ---------------------------------------------------------------------------
// Quantum half-plane

/// Symmetry generators with every derivative moved to the right:
/// L1 = -i(x dx + y dy), L2 = -i dx, L3 = -i(y^2 - x^2) dx + 2ixy dy + 2 beta y.
std::array<DiffOp, 3> quantum_generators();
/// The same generators written with derivatives to the left of coordinates
/// and de Witt momentum p_y = -i dy + i/y.
std::array<DiffOp, 3> quantum_generators_ordered();

/// J0 = (L2 - L3)/2, J1 = (L2 + L3)/2, J2 = L1.
std::array<DiffOp, 3> su11_basis();
/// C = J0^2 - J1^2 - J2^2.
DiffOp casimir();
/// -L2 L3 - L1^2 + i L1.
DiffOp casimir_from_generators();

/// (1/2ma^2) [ -y^2 (dx^2 + dy^2) - 2 i beta y dx + beta^2 ], typed directly.
DiffOp hamiltonian_halfplane();
/// (1/2ma^2) y (P1^2 + P2^2) y built from de Witt momenta.
DiffOp hamiltonian_halfplane_sandwich();
/// (1/2ma^2) (P1^2 + P2^2) y^2.
DiffOp hamiltonian_halfplane_metric_right();

/// Half-plane operator rewritten in z = x + iy, zb = x - iy.
DiffOp halfplane_to_complex(const DiffOp& op);
/// (1/2ma^2) [ (z - zb)^2 db d - beta (z - zb)(d + db) + beta^2 ], typed directly.
DiffOp hamiltonian_halfplane_complex();

// ---------------------------------------------------------------------------
// Flat plane

/// a = -2i kappa (db + (m omega_c / 4 hbar) z), a+ = -2i kappa (d - (m omega_c / 4 hbar) zb).
std::array<DiffOp, 2> ladder_operators();
/// -(2 hbar^2/m) d db - (hbar omega_c / 2)(z d - zb db) + (m omega_c^2 / 8)|z|^2.
DiffOp hamiltonian_flat_complex();
/// db + (m omega_c / 4 hbar) z, the ground-state annihilation condition.
DiffOp ground_state_annihilator();
/// Flat complex operator rewritten in x, y (d = (dx - i dy)/2, db = (dx + i dy)/2).
DiffOp flat_to_real(const DiffOp& op);

// ---------------------------------------------------------------------------
// Disk

/// The disk Hamiltonian in the expanded form quoted in the literature:
/// (phi/2m){ -phi lap - (4/rho^2)(x dx + y dy) + 2iB phi (y dx - x dy) + B^2 phi
///           - (4/rho^2)(1 + 2|w|^2/(rho^2 phi)) }.
DiffOp disk_hamiltonian_printed();
/// Expansion of the gauged Laplace-Beltrami operator on the disk.
DiffOp disk_hamiltonian_expanded();

// ---------------------------------------------------------------------------
// Identity reports

enum class Status { ExactPass, Fail, DocumentedDiff };

std::string to_string(Status s);

using Residual = std::variant<DiffOp, PhasePoly>;

struct Check {
  std::string label;
  Residual residual;
  bool is_zero() const;
  std::string residual_text() const;
};

struct IdentityReport {
  std::string name;
  std::string statement;
  Status status = Status::Fail;
  std::vector<Check> checks;
  /// Supporting evidence, e.g. residuals of rejected orderings.
  std::vector<std::string> notes;
  /// Compact description of an accepted difference.
  std::string diff_summary;

  /// Text of the first nonzero residual, "0" when all vanish.
  std::string residual_text() const;
  /// One line: status, name, statement, and the residual when nonzero.
  std::string rendered() const;
};

/// Status is ExactPass iff every check residual is zero.
IdentityReport make_report(std::string name, std::string statement, std::vector<Check> checks,
                           std::vector<std::string> notes = {});

IdentityReport poisson_algebra_report();
IdentityReport classical_casimir_report();
IdentityReport ladder_commutator_report();
IdentityReport ladder_hamiltonian_report();
IdentityReport generator_ordering_report();
IdentityReport generator_commutators_report();
IdentityReport su11_commutators_report();
IdentityReport casimir_form_report();
IdentityReport casimir_invariance_report();
IdentityReport hamiltonian_ordering_report();
IdentityReport hamiltonian_casimir_report();
IdentityReport complex_form_report();
IdentityReport sphere_identity();
/// DocumentedDiff when the residual is a multiplication operator whose
/// numerator is homogeneous of degree 2 in B; ExactPass when it vanishes.
IdentityReport disk_expansion_report();

/// Every report above, in a fixed order.
std::vector<IdentityReport> run_identity_suite();

std::string render_text(const std::vector<IdentityReport>& reports, bool details);
/// JSON array of {name, statement, status, residual_text, notes}.
std::string render_json(const std::vector<IdentityReport>& reports);

}  // namespace qhall::models
