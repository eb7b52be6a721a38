#pragma once

// Seeded generators for property tests over the algebra kernel.

#include <random>

#include "qhall/opalg.hpp"

namespace qhall::testing {

using namespace qhall::opalg;

class OpGenerator {
 public:
  OpGenerator(SymbolTablePtr symbols, unsigned seed) : symbols_(std::move(symbols)), rng_(seed) {}

  GaussianRational scalar() {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    Rational re(num(rng_), den(rng_));
    Rational im(coin(0.3) ? num(rng_) : 0, den(rng_));
    re.canonicalize();
    im.canonicalize();
    GaussianRational c(re, im);
    return c.is_zero() ? GaussianRational(1) : c;
  }

  /// Random Laurent polynomial: nonnegative degree <= max_degree in every
  /// symbol, plus occasional negative powers of Laurent symbols.
  LaurentPoly poly(int max_degree, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    LaurentPoly p(symbols_);
    int n = nterms(rng_);
    for (int t = 0; t < n; ++t) {
      Exponent e(symbols_->size(), 0);
      int budget = deg(rng_);
      std::uniform_int_distribution<std::size_t> pick(0, symbols_->size() - 1);
      for (int k = 0; k < budget; ++k) e[pick(rng_)] += 1;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if ((*symbols_)[i].laurent && coin(0.15)) e[i] -= 1;
      }
      p.add_term(std::move(e), scalar());
    }
    return p;
  }

  /// Coefficient, sometimes with a polynomial denominator.
  RationalFunc coefficient(const LaurentPoly* denominator) {
    RationalFunc c(poly(2, 2));
    if (denominator != nullptr && coin(0.3)) c = c / RationalFunc(*denominator);
    return c;
  }

  /// At most `max_terms` terms, each with derivative order <= max_order.
  DiffOp op(int max_order, int max_terms, const LaurentPoly* denominator = nullptr) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> ord(0, max_order);
    const auto& coords = symbols_->coordinates();
    std::uniform_int_distribution<std::size_t> pick(0, coords.size() - 1);
    DiffOp out(symbols_);
    int n = nterms(rng_);
    for (int t = 0; t < n; ++t) {
      DiffOp term(coefficient(denominator));
      int order = ord(rng_);
      for (int k = 0; k < order; ++k) {
        term = term * DiffOp::derivative(symbols_, (*symbols_)[coords[pick(rng_)]].name);
      }
      out += term;
    }
    return out;
  }

  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  SymbolTablePtr symbols_;
  std::mt19937 rng_;
};

}  // namespace qhall::testing
