#pragma once

#include <array>
#include <string>
#include <vector>

namespace qhall::classical {

struct PhaseState {
  double t = 0.0;
  double x = 0.0;
  double y = 1.0;
  double px = 0.0;
  double py = 0.0;
};

struct Trajectory {
  double a = 1.0;
  double beta = 0.0;
  double dt = 0.0;
  std::vector<PhaseState> states;
  /// Set when a step would have reached y <= 0; `states` ends at the last
  /// valid state.
  bool domain_exit = false;
};

/// (dx, dy, dpx, dpy) from the classical half-plane Hamiltonian with 1/4a^2
/// normalization. Throws DomainError unless y > 0.
std::array<double, 4> hamilton_rhs(const PhaseState& s, double a, double beta);

/// Classic fourth-order Runge-Kutta, steps + 1 states unless the orbit
/// leaves the domain. Throws DomainError for dt <= 0 or an invalid start.
Trajectory integrate_rk4(const PhaseState& s0, double a, double beta, double dt, long steps);

struct ConservedValues {
  double H = 0.0;
  double L1 = 0.0;
  /// The translation charge that closes the bracket algebra (p_x).
  double L2 = 0.0;
  /// The charge as printed alongside the other two (p_y); not conserved.
  double L2_printed = 0.0;
  double L3 = 0.0;
};

/// Throws DomainError unless y > 0.
ConservedValues conserved_values(const PhaseState& s, double a, double beta);

struct DriftSummary {
  /// max_t |Q(t) - Q(0)| / |Q(0)|, or the absolute drift when Q(0) = 0.
  double H = 0.0;
  double L1 = 0.0;
  double L2 = 0.0;
  double L3 = 0.0;

  double max() const;
};

DriftSummary conserved_drift(const Trajectory& traj);

struct CircleFit {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;
  /// Root-mean-square of (distance to center - r).
  double rms = 0.0;
};

/// Algebraic (Kasa) least-squares circle through the (x, y) samples. Throws
/// DomainError for fewer than 10 distinct points and FitSingularError for
/// collinear or otherwise degenerate samples.
CircleFit circle_fit(const std::vector<PhaseState>& states);
inline CircleFit circle_fit(const Trajectory& traj) { return circle_fit(traj.states); }

/// Whether the orbit through s is bounded: |beta| > K with
/// K^2 = (y px + beta)^2 + y^2 py^2.
bool is_bounded(const PhaseState& s, double beta);
/// Period 4 pi a^2 / sqrt(beta^2 - K^2) of a bounded orbit; throws
/// DomainError for unbounded ones.
double orbit_period(const PhaseState& s, double a, double beta);

/// Least-squares slope of log(error) against log(dt), where the error is the
/// final phase-space distance to a reference run at dts.min()/16 over the
/// same time span `t_end`.
double convergence_order(const PhaseState& s0, double a, double beta, double t_end, const std::vector<double>& dts);

/// Header `t,x,y,px,py,H,L1,L2,L3`, 17 significant digits.
std::string to_csv(const Trajectory& traj);

}  // namespace qhall::classical
