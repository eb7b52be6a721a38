#include "qhall/opalg/phase_poly.hpp"

#include <algorithm>

#include "qhall/errors.hpp"

namespace qhall::opalg {

PhaseSpacePtr PhaseSpace::make(const std::vector<std::string>& coordinates,
                               const std::vector<std::string>& momenta,
                               const std::vector<std::string>& parameters,
                               const std::vector<std::string>& laurent) {
  if (coordinates.size() != momenta.size()) {
    throw DeclarationError("phase space needs one momentum per coordinate");
  }
  auto is_laurent = [&](const std::string& n) {
    return std::find(laurent.begin(), laurent.end(), n) != laurent.end();
  };
  std::vector<Symbol> symbols;
  for (const auto& n : coordinates) symbols.push_back({n, SymbolKind::Coordinate, is_laurent(n)});
  for (const auto& n : momenta) symbols.push_back({n, SymbolKind::Coordinate, is_laurent(n)});
  for (const auto& n : parameters) symbols.push_back({n, SymbolKind::Parameter, is_laurent(n)});

  auto space = std::make_shared<PhaseSpace>();
  space->symbols = SymbolTable::make(std::move(symbols));
  for (std::size_t r = 0; r < coordinates.size(); ++r) {
    space->pairs.emplace_back(r, coordinates.size() + r);
  }
  return space;
}

PhasePoly::PhasePoly(PhaseSpacePtr space) : space_(std::move(space)), poly_(space_->symbols) {}

PhasePoly::PhasePoly(PhaseSpacePtr space, LaurentPoly poly)
    : space_(std::move(space)), poly_(std::move(poly)) {
  require_same(space_->symbols, poly_.symbols());
}

PhasePoly PhasePoly::constant(PhaseSpacePtr space, const GaussianRational& c) {
  auto table = space->symbols;
  return {std::move(space), LaurentPoly::constant(table, c)};
}

PhasePoly PhasePoly::symbol(PhaseSpacePtr space, const std::string& name, int power) {
  auto table = space->symbols;
  return {std::move(space), LaurentPoly::symbol(table, name, power)};
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
  poly_ += o.poly_;
  return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
  poly_ -= o.poly_;
  return *this;
}

PhasePoly& PhasePoly::operator*=(const PhasePoly& o) {
  poly_ *= o.poly_;
  return *this;
}

PhasePoly& PhasePoly::operator*=(const GaussianRational& c) {
  poly_ *= c;
  return *this;
}

PhasePoly PhasePoly::derivative(const std::string& name) const {
  return {space_, poly_.derivative(space_->symbols->index_of(name))};
}

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g) {
  require_same(f.space()->symbols, g.space()->symbols);
  LaurentPoly out(f.space()->symbols);
  for (const auto& [q, p] : f.space()->pairs) {
    out += f.poly().derivative(q) * g.poly().derivative(p);
    out -= f.poly().derivative(p) * g.poly().derivative(q);
  }
  return {f.space(), std::move(out)};
}

}  // namespace qhall::opalg
