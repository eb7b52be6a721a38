#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qhall::spectra {

using Rational = mpq_class;

enum class Geometry { Flat, HalfPlane, Sphere };

std::string to_string(Geometry g);

struct SpectrumLine {
  Geometry geometry = Geometry::Flat;
  /// Level label: "n" for the flat plane, "l" otherwise.
  std::string qn_name;
  long qn = 0;
  /// Fixed parameters of the level (beta, k, ...).
  std::vector<std::pair<std::string, double>> context;
  double energy = 0.0;
  /// Present when the energy was computed from rational parameters.
  std::optional<Rational> energy_exact;
};

/// E_n = (n + 1/2) hbar omega_c.
SpectrumLine landau_flat(long n, const Rational& omega_c, const Rational& hbar = 1);

/// E = (1/2ma^2)(beta^2 + 1/4 - (l - beta + 1/2)^2). The algebraic and the
/// differential derivations give this same formula.
/// Throws NoBoundStateError unless 0 <= l < beta - 1/2.
SpectrumLine landau_halfplane(const Rational& beta, long l, const Rational& m = 1, const Rational& a = 1);

/// Number of integers l with 0 <= l < beta - 1/2. Throws DomainError if beta <= 0.
long halfplane_level_count(const Rational& beta);

bool in_bound_window(const Rational& beta, long l);

/// E = (1/2ma^2)(1/4 - n^2 + beta^2).
Rational energy_from_whittaker_index(const Rational& n, const Rational& beta, const Rational& m = 1,
                                     const Rational& a = 1);

/// E_l = (2/rho^2)[(l - k/2)(l - k/2 + 1) - k^2/4]. Throws DomainError if
/// l < 0 or rho <= 0.
SpectrumLine sphere_spectrum(long l, const Rational& k, const Rational& rho);

/// Unnormalized Psi = exp(-icx - cy) y^(beta-l) L_l^(2beta-2l-1)(2cy).
std::complex<double> eigenfunction_halfplane(double beta, long l, double c, double x, double y);

/// psi_0 = exp(-|z|^2 / 4 z0^2).
std::complex<double> ground_state_flat(std::complex<double> z, double z0);

/// {"geometry", "params", "levels": [{"qn", "energy", "energy_exact"}]}.
std::string to_json(Geometry g, const std::vector<std::pair<std::string, double>>& params,
                    const std::vector<SpectrumLine>& levels);
/// "qn,energy" header then one row per level, 17 significant digits.
std::string to_csv(const std::vector<SpectrumLine>& levels);

}  // namespace qhall::spectra
