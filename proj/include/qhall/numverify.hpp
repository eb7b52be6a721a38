#pragma once

#include <complex>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qhall/opalg.hpp"

namespace qhall::numverify {

using Complex = std::complex<double>;
using opalg::DiffOp;

/// Numeric values for the parameters of an operator's symbol table.
using Bindings = std::map<std::string, double>;
/// A function of the operator's coordinates, in symbol-table order.
using Field = std::function<Complex(std::span<const double>)>;
/// Finite-difference step to use at a given point.
using StepRule = std::function<double(std::span<const double>)>;

/// H f at `point` with fourth-order central stencils (tensor products for
/// mixed derivatives) and exactly evaluated coefficients. Every parameter a
/// coefficient depends on must be bound. Throws SingularityError at a
/// coefficient pole and DomainError for derivative orders above 2.
Complex fd_apply(const DiffOp& H, const Bindings& params, const Field& f, std::span<const double> point, double h);

/// max over points of |H psi - E psi| / (|E| |psi| + 1e-300).
double residual_check(const DiffOp& H, const Bindings& params, const Field& psi, Complex E,
                      const std::vector<std::vector<double>>& points, const StepRule& step);
double residual_check(const DiffOp& H, const Bindings& params, const Field& psi, Complex E,
                      const std::vector<std::vector<double>>& points, double h);

/// k smallest eigenvalues of the symmetric tridiagonal matrix, ascending,
/// by Sturm-sequence bisection until the bracket is narrower than 1e-12.
std::vector<double> tridiag_eigs(const std::vector<double>& diag, const std::vector<double>& offdiag, std::size_t k);
/// Number of eigenvalues strictly below x.
std::size_t sturm_count(const std::vector<double>& diag, const std::vector<double>& offdiag, double x);

/// Interior points s_i = s_min + i h, i = 1..n_points, h = (s_max - s_min)/(n_points + 1).
struct FDGrid {
  double s_min = 1e-3;
  double s_max = 80.0;
  int n_points = 16000;

  double spacing() const { return (s_max - s_min) / (n_points + 1); }
  /// Throws DomainError unless 0 < s_min < s_max and n_points >= 100.
  void validate() const;
};

struct OracleSpectrum {
  double beta = 0.0;
  FDGrid grid;
  /// Smallest generalized eigenvalues mu = 1/4 - n^2, ascending.
  std::vector<double> mu;
  /// (mu + beta^2) / (2 m a^2).
  std::vector<double> energies;
  /// Closed-form energies for the same levels.
  std::vector<double> analytic;
  /// |energy - analytic| / |analytic|.
  std::vector<double> relerr;
  /// Eigenvalues of the discrete problem below 1/4.
  std::size_t bound_count = 0;

  std::string to_json() const;
};

/// Solves -phi'' + (1/4 - beta/s) phi = mu phi / s^2 with Dirichlet ends by
/// second-order differences, symmetrized through the diagonal weight.
/// Throws DomainError if beta <= 1/2 or levels exceeds the bound-state
/// window, ResolutionError if fewer than `levels` eigenvalues fall below 1/4.
OracleSpectrum whittaker_oracle(double beta, const FDGrid& grid, int levels, double m = 1.0, double a = 1.0);

/// Per unit x-length, the integral of |psi(0, y)|^2 a^2/y^2 over y > 0, by
/// adaptive Simpson after substituting y = t^p to smooth the origin.
/// `cutoff` of 0 picks a y cutoff past which the exponential tail is
/// negligible. Throws NonNormalizableError when beta - l <= 1/2 and
/// NoBoundStateError when l < 0.
double norm_quadrature(const std::function<Complex(double, double)>& psi, double beta, long l, double c,
                       double a = 1.0, double cutoff = 0.0);
/// The same for the closed-form eigenfunction.
double norm_quadrature(double beta, long l, double c, double a = 1.0, double cutoff = 0.0);

/// Adaptive Simpson quadrature of f on [lo, hi] to the absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi, double tol,
                        int max_depth = 50);

}  // namespace qhall::numverify
