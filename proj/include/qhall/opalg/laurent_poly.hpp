#pragma once

#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "qhall/opalg/gaussian_rational.hpp"
#include "qhall/opalg/symbols.hpp"

namespace qhall::opalg {

/// Graded lexicographic order: total degree first, then lexicographic in
/// declaration order.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Multivariate Laurent polynomial with Gaussian-rational coefficients.
///
/// Negative exponents are accepted only for symbols declared Laurent. No zero
/// coefficient is ever stored, and the table's square rules are applied to
/// every inserted term, so a value is always in normal form.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, GaussianRational, GrlexLess>;

  explicit LaurentPoly(SymbolTablePtr symbols);

  static LaurentPoly constant(SymbolTablePtr symbols, const GaussianRational& c);
  static LaurentPoly symbol(SymbolTablePtr symbols, const std::string& name, int power = 1);
  static LaurentPoly monomial(SymbolTablePtr symbols, Exponent exponent, const GaussianRational& c);

  const SymbolTablePtr& symbols() const { return symbols_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Value when the polynomial is a constant (including zero).
  std::optional<GaussianRational> constant_value() const;
  /// True when some term carries a nonzero power of symbol `index`.
  bool depends_on(std::size_t index) const;

  /// Greatest term under GrlexLess. Precondition: nonzero.
  const TermMap::value_type& leading() const { return *terms_.rbegin(); }
  /// Componentwise minimum exponent over all terms (zero vector for zero).
  Exponent min_exponents() const;

  /// Adds c * monomial(exponent), applying square rules.
  void add_term(Exponent exponent, GaussianRational c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussianRational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const GaussianRational& c) { return a *= c; }
  friend LaurentPoly operator*(const GaussianRational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  LaurentPoly pow(unsigned n) const;
  /// Multiplies by the monomial with the given exponent.
  LaurentPoly shifted(const Exponent& by) const;

  /// Formal partial derivative with respect to symbol `index`.
  LaurentPoly derivative(std::size_t index) const;

  /// Quotient when `divisor` divides this polynomial in the Laurent ring,
  /// nullopt otherwise.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  /// Numeric value; `values` is indexed like the symbol table. Throws
  /// SingularityError for a negative power of a symbol bound to zero.
  std::complex<double> evaluate(std::span<const std::complex<double>> values) const;

  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  /// Structural total order used to sort denominator factors.
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

 private:
  SymbolTablePtr symbols_;
  TermMap terms_;
};

/// Renders c * monomial as text, e.g. "-2*i*beta*y^2".
std::string render_term(const SymbolTable& symbols, const Exponent& e, const GaussianRational& c);

}  // namespace qhall::opalg
