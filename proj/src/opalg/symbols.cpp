#include "qhall/opalg/symbols.hpp"

#include <algorithm>

#include "qhall/errors.hpp"

namespace qhall::opalg {

SymbolTablePtr SymbolTable::make(std::vector<Symbol> symbols, const std::vector<RuleSpec>& rules) {
  std::shared_ptr<SymbolTable> table(new SymbolTable());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i].name.empty()) throw DeclarationError("symbol with empty name");
    for (std::size_t j = 0; j < i; ++j) {
      if (symbols[j].name == symbols[i].name) {
        throw DeclarationError("duplicate symbol '" + symbols[i].name + "'");
      }
    }
    if (symbols[i].kind == SymbolKind::Coordinate) table->coordinates_.push_back(i);
  }
  table->symbols_ = std::move(symbols);

  for (const auto& spec : rules) {
    SquareRule rule;
    rule.symbol = table->index_of(spec.symbol);
    rule.coeff = spec.coeff;
    rule.monomial.assign(table->size(), 0);
    for (const auto& [name, power] : spec.monomial) {
      std::size_t k = table->index_of(name);
      if (k == rule.symbol) throw DeclarationError("square rule refers to its own symbol");
      rule.monomial[k] += power;
      if (rule.monomial[k] < 0 && !table->symbols_[k].laurent) {
        throw DeclarationError("square rule needs negative power of non-Laurent '" + name + "'");
      }
    }
    if (table->symbols_[rule.symbol].laurent) {
      throw DeclarationError("square rule symbol '" + spec.symbol + "' must not be Laurent");
    }
    table->rules_.push_back(std::move(rule));
  }
  return table;
}

std::size_t SymbolTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name == name) return i;
  }
  throw DeclarationError("unknown symbol '" + name + "'");
}

bool SymbolTable::contains(const std::string& name) const {
  return std::any_of(symbols_.begin(), symbols_.end(),
                     [&](const Symbol& s) { return s.name == name; });
}

std::size_t SymbolTable::coordinate_slot(std::size_t index) const {
  auto it = std::find(coordinates_.begin(), coordinates_.end(), index);
  if (it == coordinates_.end()) {
    throw DeclarationError("'" + symbols_.at(index).name + "' is not a coordinate");
  }
  return static_cast<std::size_t>(it - coordinates_.begin());
}

bool SymbolTable::same_as(const SymbolTable& other) const {
  if (this == &other) return true;
  if (symbols_.size() != other.symbols_.size() || rules_.size() != other.rules_.size()) return false;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto& a = symbols_[i];
    const auto& b = other.symbols_[i];
    if (a.name != b.name || a.kind != b.kind || a.laurent != b.laurent) return false;
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& a = rules_[i];
    const auto& b = other.rules_[i];
    if (a.symbol != b.symbol || !(a.coeff == b.coeff) || a.monomial != b.monomial) return false;
  }
  return true;
}

void require_same(const SymbolTablePtr& a, const SymbolTablePtr& b) {
  if (!a || !b || !a->same_as(*b)) {
    throw DeclarationError("operands declared over different symbol tables");
  }
}

}  // namespace qhall::opalg
