#include "qhall/manybody.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qhall/errors.hpp"

namespace qhall::manybody {

void ParticleConfig::validate() const {
  if (points.empty() || points.size() > kMaxParticles) {
    throw DomainError("particle count must be between 1 and " + std::to_string(kMaxParticles));
  }
  if (!(z0 > 0.0)) throw DomainError("z0 must be positive");
}

ParticleConfig parse_config(const std::string& json_text) {
  ParticleConfig cfg;
  try {
    auto doc = nlohmann::json::parse(json_text);
    cfg.z0 = doc.at("z0").get<double>();
    for (const auto& p : doc.at("points")) {
      if (!p.is_array() || p.size() != 2) throw DomainError("each point must be [re, im]");
      cfg.points.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("particle config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ParticleConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open particle config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_json(const ParticleConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["z0"] = cfg.z0;
  doc["points"] = nlohmann::ordered_json::array();
  for (auto z : cfg.points) doc["points"].push_back({z.real(), z.imag()});
  return doc.dump();
}

double gaussian_factor(const ParticleConfig& cfg) {
  double s = 0.0;
  for (auto z : cfg.points) s += std::norm(z);
  return std::exp(-s / (4.0 * cfg.z0 * cfg.z0));
}

Complex slater_lll(const ParticleConfig& cfg, const std::vector<unsigned>& orbitals) {
  cfg.validate();
  const std::size_t n = cfg.points.size();
  if (orbitals.size() != n) throw DomainError("slater_lll: need one orbital per particle");
  std::vector<unsigned> sorted = orbitals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PauliViolationError("slater_lll: repeated orbital makes the determinant vanish identically");
  }

  Eigen::MatrixXcd M(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M(i, j) = std::pow(cfg.points[i], static_cast<int>(orbitals[j]));
  }
  return M.partialPivLu().determinant() * gaussian_factor(cfg);
}

Complex laughlin(const ParticleConfig& cfg, int m) {
  cfg.validate();
  if (m < 1) throw DomainError("laughlin: m must be at least 1");
  Complex product = 1.0;
  for (std::size_t i = 0; i < cfg.points.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.points.size(); ++j) product *= std::pow(cfg.points[i] - cfg.points[j], m);
  }
  return product * gaussian_factor(cfg);
}

double filling_factor(long n_particles, double B, double S) {
  if (!(B > 0.0) || !(S > 0.0)) throw DomainError("filling_factor: B and S must be positive");
  return 2.0 * std::numbers::pi * (static_cast<double>(n_particles) / S) / B;
}

mpq_class filling_quantized(long n_particles, long n_flux) {
  if (n_flux < 1 || n_particles < 0) throw DomainError("filling_quantized: need N >= 0 and N_phi >= 1");
  mpq_class nu(n_particles, n_flux);
  nu.canonicalize();
  return nu;
}

}  // namespace qhall::manybody
