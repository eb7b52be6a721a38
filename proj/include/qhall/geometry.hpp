#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "qhall/opalg.hpp"

namespace qhall::geometry {

using opalg::DiffOp;
using opalg::RationalFunc;
using opalg::SymbolTablePtr;

enum class MetricKind { Flat, HalfPlane, Disk };

std::string to_string(MetricKind kind);

/// Symbols for each geometry: coordinates x, y followed by the parameters the
/// metric, gauge field and mass need.
///   flat:      x, y; m, B
///   halfplane: x, y (Laurent); beta, a, m
///   disk:      x, y; rho, B, m
SymbolTablePtr symbols_for(MetricKind kind);

/// Conformally flat metric g_ij = factor^2 delta_ij.
///
/// `factor` is symbolic in the geometry's length parameter (a or rho);
/// `scale` is the numeric value used by numeric checks and domain tests.
struct Metric2D {
  MetricKind kind = MetricKind::Flat;
  RationalFunc factor;
  double scale = 1.0;

  const SymbolTablePtr& symbols() const { return factor.symbols(); }
  /// sqrt(det g) = factor^2.
  RationalFunc sqrt_det() const { return factor * factor; }
  /// g^11 = g^22 = factor^-2.
  RationalFunc inverse_component() const { return sqrt_det().inverse(); }
  /// True when (x, y) lies in the open domain (y > 0, |w| < rho).
  bool contains(double x, double y) const;
};

/// factor = 1 (flat), a/y (halfplane), 1/phi with phi = 1 - (x^2+y^2)/rho^2
/// (disk). Throws DomainError unless scale > 0.
Metric2D make_metric(MetricKind kind, double scale = 1.0);

struct GaugePotential {
  RationalFunc ax;
  RationalFunc ay;
};

GaugePotential zero_gauge(const SymbolTablePtr& symbols);
/// A = (-beta/y, 0).
GaugePotential halfplane_gauge();
/// A = B (y, -x).
GaugePotential disk_gauge();

/// phi = 1 - (x^2 + y^2)/rho^2 over the disk symbols.
RationalFunc disk_phi();

/// De Witt momenta p_j = -i (d_j + (1/2) d_j ln sqrt(g)), with the log
/// derivative taken exactly as (d_j sqrt g) / sqrt g.
std::pair<DiffOp, DiffOp> dewitt_momenta(const Metric2D& metric);

enum class Ordering {
  /// (1/(2m sqrt g)) P_i (sqrt g g^ij) P_j, exactly as the gauged
  /// Laplace-Beltrami operator is written.
  Divergence,
  /// (1/2m) factor^-1 (P_1^2 + P_2^2) factor^-1.
  Sandwich,
  /// (1/2m) (P_1^2 + P_2^2) factor^-2.
  MetricRight,
};

/// Gauged Laplace-Beltrami Hamiltonian built from de Witt momenta and
/// P_j = p_j - A_j, expanded to normal form.
DiffOp laplace_beltrami(const Metric2D& metric, const GaugePotential& gauge,
                        const RationalFunc& mass, Ordering ordering = Ordering::Divergence);

/// Scalar curvature R = 2K of the metric at (x, y), where
/// K = -factor^-2 * Laplacian(ln factor) and the Laplacian uses the
/// five-point stencil with spacing `step`. Throws DomainError if the stencil
/// leaves the domain.
double scalar_curvature_fd(const Metric2D& metric, std::array<double, 2> point, double step);

/// Closed-form scalar curvature: 0, -2/a^2, -8/rho^2.
double scalar_curvature_exact(const Metric2D& metric);

}  // namespace qhall::geometry
