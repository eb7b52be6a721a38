#pragma once

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qhall::manybody {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxParticles = 12;

struct ParticleConfig {
  std::vector<Complex> points;
  double z0 = 1.0;

  /// Throws DomainError unless 1 <= N <= kMaxParticles and z0 > 0.
  void validate() const;
};

/// Parses {"z0": r, "points": [[re, im], ...]}; throws DomainError on
/// malformed or invalid input.
ParticleConfig parse_config(const std::string& json_text);
ParticleConfig load_config(const std::string& path);
std::string to_json(const ParticleConfig& cfg);

/// exp(-sum |z_i|^2 / 4 z0^2).
double gaussian_factor(const ParticleConfig& cfg);

/// det[z_i^{n_j}] times the Gaussian factor, by partial-pivot LU.
/// Throws PauliViolationError when the orbitals repeat.
Complex slater_lll(const ParticleConfig& cfg, const std::vector<unsigned>& orbitals);

/// prod_{i<j} (z_i - z_j)^m times the Gaussian factor (K_m = 1).
/// Throws DomainError for m < 1.
Complex laughlin(const ParticleConfig& cfg, int m);

/// nu = 2 pi (N / S) / B. Throws DomainError unless B > 0 and S > 0.
double filling_factor(long n_particles, double B, double S);
/// nu = N / N_phi exactly. Throws DomainError for N_phi < 1 or N < 0.
mpq_class filling_quantized(long n_particles, long n_flux);

}  // namespace qhall::manybody
