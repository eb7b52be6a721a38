#pragma once

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qhall/opalg/laurent_poly.hpp"

namespace qhall::opalg {

/// Symbol table plus the canonical pairing (q^r, p_r).
struct PhaseSpace {
  SymbolTablePtr symbols;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  /// Declares coordinates, their conjugate momenta, then parameters.
  /// Names listed in `laurent` may carry negative powers.
  static std::shared_ptr<const PhaseSpace> make(const std::vector<std::string>& coordinates,
                                                const std::vector<std::string>& momenta,
                                                const std::vector<std::string>& parameters,
                                                const std::vector<std::string>& laurent);
};
using PhaseSpacePtr = std::shared_ptr<const PhaseSpace>;

/// Classical observable: Laurent polynomial in positions, momenta and
/// parameters.
class PhasePoly {
 public:
  explicit PhasePoly(PhaseSpacePtr space);
  PhasePoly(PhaseSpacePtr space, LaurentPoly poly);

  static PhasePoly constant(PhaseSpacePtr space, const GaussianRational& c);
  static PhasePoly symbol(PhaseSpacePtr space, const std::string& name, int power = 1);

  const PhaseSpacePtr& space() const { return space_; }
  const LaurentPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  PhasePoly& operator+=(const PhasePoly& o);
  PhasePoly& operator-=(const PhasePoly& o);
  PhasePoly& operator*=(const PhasePoly& o);
  PhasePoly& operator*=(const GaussianRational& c);
  friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
  friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
  friend PhasePoly operator*(PhasePoly a, const PhasePoly& b) { return a *= b; }
  friend PhasePoly operator*(PhasePoly a, const GaussianRational& c) { return a *= c; }
  friend PhasePoly operator*(const GaussianRational& c, PhasePoly a) { return a *= c; }
  PhasePoly operator-() const { return {space_, -poly_}; }

  PhasePoly derivative(const std::string& name) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> values) const {
    return poly_.evaluate(values);
  }
  std::string to_string() const { return poly_.to_string(); }

  friend bool operator==(const PhasePoly& a, const PhasePoly& b) { return a.poly_ == b.poly_; }

 private:
  PhaseSpacePtr space_;
  LaurentPoly poly_;
};

/// {F, G} = sum_r (dF/dq^r dG/dp_r - dF/dp_r dG/dq^r).
PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g);

}  // namespace qhall::opalg
