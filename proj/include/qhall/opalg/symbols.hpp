#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qhall/opalg/gaussian_rational.hpp"

namespace qhall::opalg {

/// Exponent vector over the symbols of a SymbolTable, in declaration order.
using Exponent = std::vector<int>;

enum class SymbolKind {
  Coordinate,  ///< derivatives act on it
  Parameter,   ///< derivative-inert (beta, a, m, rho, B, hbar, omega_c, ...)
};

struct Symbol {
  std::string name;
  SymbolKind kind = SymbolKind::Coordinate;
  /// Negative powers allowed (y on the half-plane, nonzero parameters).
  bool laurent = false;
};

/// s^2 -> coeff * s^0 * monomial, applied whenever a polynomial is normalized.
struct SquareRule {
  std::size_t symbol = 0;
  GaussianRational coeff;
  Exponent monomial;
};

class SymbolTable;
using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

/// Ordered symbol declarations shared by every polynomial, rational function
/// and operator that may be combined with each other. Immutable.
class SymbolTable {
 public:
  struct RuleSpec {
    std::string symbol;
    GaussianRational coeff;
    std::vector<std::pair<std::string, int>> monomial;
  };

  static SymbolTablePtr make(std::vector<Symbol> symbols, const std::vector<RuleSpec>& rules = {});

  std::size_t size() const { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  /// Throws DeclarationError for unknown names.
  std::size_t index_of(const std::string& name) const;
  bool contains(const std::string& name) const;

  /// Symbol indices of the coordinates, in declaration order.
  const std::vector<std::size_t>& coordinates() const { return coordinates_; }
  /// Position of symbol `index` within coordinates(); throws if it is a parameter.
  std::size_t coordinate_slot(std::size_t index) const;

  const std::vector<SquareRule>& square_rules() const { return rules_; }

  bool same_as(const SymbolTable& other) const;

 private:
  SymbolTable() = default;

  std::vector<Symbol> symbols_;
  std::vector<std::size_t> coordinates_;
  std::vector<SquareRule> rules_;
};

/// Throws DeclarationError unless both tables declare the same symbols.
void require_same(const SymbolTablePtr& a, const SymbolTablePtr& b);

}  // namespace qhall::opalg
