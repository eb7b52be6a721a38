#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "qhall/opalg/laurent_poly.hpp"

namespace qhall::opalg {

/// Quotient num / den of Laurent polynomials.
///
/// The denominator is kept as a product of powers of polynomial factors.
/// Every factor has nonnegative exponents, no monomial content and leading
/// coefficient 1; monomial denominators are absorbed into the numerator as
/// negative powers of Laurent symbols. After each operation the numerator is
/// divided by a factor as long as the division is exact. Equality is decided
/// by cross-multiplication, so no multivariate gcd is needed.
class RationalFunc {
 public:
  struct Factor {
    LaurentPoly base;
    int power = 1;
  };

  explicit RationalFunc(SymbolTablePtr symbols);
  RationalFunc(LaurentPoly num);  // NOLINT(google-explicit-constructor)

  /// Throws DeclarationError when `den` is zero or its monomial part needs
  /// a negative power of a non-Laurent symbol.
  static RationalFunc fraction(const LaurentPoly& num, const LaurentPoly& den);
  static RationalFunc constant(SymbolTablePtr symbols, const GaussianRational& c);
  static RationalFunc symbol(SymbolTablePtr symbols, const std::string& name, int power = 1);

  const SymbolTablePtr& symbols() const { return num_.symbols(); }
  const LaurentPoly& num() const { return num_; }
  const std::vector<Factor>& factors() const { return den_; }
  /// Expanded denominator (1 when there are no factors).
  LaurentPoly den() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool depends_on(std::size_t index) const;

  RationalFunc inverse() const;
  RationalFunc derivative(std::size_t index) const;
  RationalFunc pow(int n) const;

  RationalFunc& operator+=(const RationalFunc& o);
  RationalFunc& operator-=(const RationalFunc& o);
  RationalFunc& operator*=(const RationalFunc& o);
  RationalFunc& operator/=(const RationalFunc& o) { return *this *= o.inverse(); }
  RationalFunc& operator*=(const GaussianRational& c);

  friend RationalFunc operator+(RationalFunc a, const RationalFunc& b) { return a += b; }
  friend RationalFunc operator-(RationalFunc a, const RationalFunc& b) { return a -= b; }
  friend RationalFunc operator*(RationalFunc a, const RationalFunc& b) { return a *= b; }
  friend RationalFunc operator/(RationalFunc a, const RationalFunc& b) { return a /= b; }
  friend RationalFunc operator*(RationalFunc a, const GaussianRational& c) { return a *= c; }
  friend RationalFunc operator*(const GaussianRational& c, RationalFunc a) { return a *= c; }
  RationalFunc operator-() const;

  /// a/b == c/d  iff  a*d - c*b == 0.
  bool equals(const RationalFunc& o) const;

  /// Substitutes images[k] for symbol k of this table; every image must be
  /// declared over `target`.
  RationalFunc substitute(const SymbolTablePtr& target, std::span<const RationalFunc> images) const;

  /// Throws SingularityError at a pole.
  std::complex<double> evaluate(std::span<const std::complex<double>> values) const;

  std::string to_string() const;

 private:
  void cancel();
  void insert_factor(LaurentPoly base, int power);

  LaurentPoly num_;
  std::vector<Factor> den_;
};

}  // namespace qhall::opalg
