#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qhall/opalg/rational_func.hpp"

namespace qhall::opalg {

/// Derivative multi-index over the coordinates of a symbol table.
using MultiIndex = std::vector<int>;

/// Linear differential operator sum_alpha c_alpha(x) d^alpha in normal form:
/// every coefficient stands to the left of its derivatives, no coefficient is
/// zero. Composition applies the generalized Leibniz rule.
class DiffOp {
 public:
  using TermMap = std::map<MultiIndex, RationalFunc, GrlexLess>;

  explicit DiffOp(SymbolTablePtr symbols);
  /// Multiplication operator f.
  DiffOp(const RationalFunc& f);  // NOLINT(google-explicit-constructor)

  /// d^order / d(name)^order.
  static DiffOp derivative(SymbolTablePtr symbols, const std::string& name, int order = 1);
  static DiffOp identity(SymbolTablePtr symbols);

  const SymbolTablePtr& symbols() const { return symbols_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest |alpha| present (0 for the zero operator).
  int order() const;
  /// Coefficient of d^alpha (zero when absent).
  RationalFunc coefficient(const MultiIndex& alpha) const;

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const GaussianRational& c);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const GaussianRational& c) { return a *= c; }
  friend DiffOp operator*(const GaussianRational& c, DiffOp a) { return a *= c; }
  DiffOp operator-() const;

  /// Operator product a∘b.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

  /// Image of a function; the result stays a rational function.
  RationalFunc apply(const RationalFunc& f) const;

  /// Renders terms like "(-2*i*beta*y)*Dx + (-y^2)*Dx^2".
  std::string to_string() const;

 private:
  void add(MultiIndex alpha, const RationalFunc& c);

  SymbolTablePtr symbols_;
  TermMap terms_;
};

/// Throws DeclarationError for operands over different symbol tables.
DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);
/// True iff a - b normalizes to the zero operator.
bool equals(const DiffOp& a, const DiffOp& b);
/// Exact image of a polynomial; throws DeclarationError if the image is not
/// a Laurent polynomial.
LaurentPoly apply_poly(const DiffOp& a, const LaurentPoly& f);
/// Integer power a^n by repeated composition (a^0 = identity).
DiffOp power(const DiffOp& a, unsigned n);

/// Rewrites an operator in new variables. `coordinate_images` gives every old
/// symbol as a function of the new ones; `derivative_images[k]` gives the
/// derivative along the k-th old coordinate as an operator over `target`.
DiffOp change_variables(const DiffOp& op, const SymbolTablePtr& target,
                        std::span<const RationalFunc> coordinate_images,
                        std::span<const DiffOp> derivative_images);

/// Re-expresses an operator over `target`, matching symbols by name. Every
/// symbol of the source table must exist in `target` with the same role.
DiffOp rebind(const DiffOp& op, const SymbolTablePtr& target);

}  // namespace qhall::opalg
