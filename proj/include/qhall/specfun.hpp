#pragma once

namespace qhall::specfun {

struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  bool converged = false;
  /// Bound on the discarded tail; 0 for a terminating series.
  double est_abs_error = 0.0;
};

inline constexpr int kSeriesTermCap = 10000;

/// Rising factorial (tau)_n, with (tau)_0 = 1.
double pochhammer(double tau, unsigned n);

/// Generalized Laguerre polynomial by the three-term recurrence.
double laguerre(unsigned n, double tau, double z);

/// Kummer's 1F1(alpha; b; z). A nonpositive integer alpha terminates the
/// series and is summed exactly; otherwise terms are added until a
/// ratio bound on the remaining tail is at most `tol`.
/// Throws PoleError when b is a nonpositive integer that the series reaches,
/// ConvergenceError when the tail bound is not met within kSeriesTermCap terms.
SeriesResult hyp1f1(double alpha, double b, double z, double tol = 1e-15);

/// M_{beta,n}(s) = e^{-s/2} s^{1/2+n} 1F1(1/2 + n - beta; 1 + 2n; s) for s > 0.
/// The mirror solution is whittaker_m(beta, -n, s).
double whittaker_m(double beta, double n, double s, double tol = 1e-15);

}  // namespace qhall::specfun
