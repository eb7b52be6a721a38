#include "qhall/spectra.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "qhall/errors.hpp"
#include "qhall/specfun.hpp"

namespace qhall::spectra {

namespace {

SpectrumLine make_line(Geometry g, std::string qn_name, long qn,
                       std::vector<std::pair<std::string, double>> context, const Rational& exact) {
  return {g, std::move(qn_name), qn, std::move(context), exact.get_d(), exact};
}

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

}  // namespace

std::string to_string(Geometry g) {
  switch (g) {
    case Geometry::Flat: return "flat";
    case Geometry::HalfPlane: return "halfplane";
    case Geometry::Sphere: return "sphere";
  }
  return "flat";
}

SpectrumLine landau_flat(long n, const Rational& omega_c, const Rational& hbar) {
  if (n < 0) throw DomainError("landau_flat: n must be nonnegative");
  Rational e = (Rational(n) + Rational(1, 2)) * hbar * omega_c;
  return make_line(Geometry::Flat, "n", n, {{"omega_c", omega_c.get_d()}, {"hbar", hbar.get_d()}}, e);
}

bool in_bound_window(const Rational& beta, long l) { return l >= 0 && 2 * Rational(l) + 1 < 2 * beta; }

SpectrumLine landau_halfplane(const Rational& beta, long l, const Rational& m, const Rational& a) {
  if (!in_bound_window(beta, l)) {
    throw NoBoundStateError("no bound state for l = " + std::to_string(l) + " at beta = " + beta.get_str() +
                            " (need 0 <= l < beta - 1/2)");
  }
  if (sgn(m) <= 0 || sgn(a) == 0) throw DomainError("landau_halfplane: need m > 0 and a != 0");
  Rational shift = Rational(l) - beta + Rational(1, 2);
  Rational e = (beta * beta + Rational(1, 4) - shift * shift) / (2 * m * a * a);
  return make_line(Geometry::HalfPlane, "l", l, {{"beta", beta.get_d()}, {"m", m.get_d()}, {"a", a.get_d()}}, e);
}

long halfplane_level_count(const Rational& beta) {
  if (sgn(beta) <= 0) throw DomainError("halfplane_level_count: beta must be positive");
  Rational top = beta - Rational(1, 2);
  if (sgn(top) <= 0) return 0;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
  return c.get_si();
}

Rational energy_from_whittaker_index(const Rational& n, const Rational& beta, const Rational& m, const Rational& a) {
  return (Rational(1, 4) - n * n + beta * beta) / (2 * m * a * a);
}

SpectrumLine sphere_spectrum(long l, const Rational& k, const Rational& rho) {
  if (l < 0) throw DomainError("sphere_spectrum: l must be nonnegative");
  if (sgn(rho) <= 0) throw DomainError("sphere_spectrum: rho must be positive");
  Rational j = Rational(l) - k / 2;
  Rational e = 2 * (j * (j + 1) - k * k / 4) / (rho * rho);
  return make_line(Geometry::Sphere, "l", l, {{"k", k.get_d()}, {"rho", rho.get_d()}}, e);
}

std::complex<double> eigenfunction_halfplane(double beta, long l, double c, double x, double y) {
  if (!(l >= 0 && 2.0 * l + 1.0 < 2.0 * beta)) {
    throw NoBoundStateError("no bound state for l = " + std::to_string(l));
  }
  if (!(c > 0.0)) throw DomainError("eigenfunction_halfplane: c must be positive");
  if (!(y > 0.0)) throw DomainError("eigenfunction_halfplane: y must be positive");
  double radial = std::exp(-c * y) * std::pow(y, beta - l) *
                  specfun::laguerre(static_cast<unsigned>(l), 2.0 * beta - 2.0 * l - 1.0, 2.0 * c * y);
  return std::polar(1.0, -c * x) * radial;
}

std::complex<double> ground_state_flat(std::complex<double> z, double z0) {
  if (!(z0 > 0.0)) throw DomainError("ground_state_flat: z0 must be positive");
  return std::exp(-std::norm(z) / (4.0 * z0 * z0));
}

std::string to_json(Geometry g, const std::vector<std::pair<std::string, double>>& params,
                    const std::vector<SpectrumLine>& levels) {
  nlohmann::ordered_json doc;
  doc["geometry"] = to_string(g);
  doc["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) doc["params"][k] = v;
  doc["levels"] = nlohmann::ordered_json::array();
  for (const auto& line : levels) {
    nlohmann::ordered_json level{{"qn", line.qn}, {"energy", line.energy}};
    if (line.energy_exact) level["energy_exact"] = line.energy_exact->get_str();
    doc["levels"].push_back(level);
  }
  return doc.dump(2);
}

std::string to_csv(const std::vector<SpectrumLine>& levels) {
  std::string out = "qn,energy\n";
  for (const auto& line : levels) out += std::to_string(line.qn) + "," + format_double(line.energy) + "\n";
  return out;
}

}  // namespace qhall::spectra
