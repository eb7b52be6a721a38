#include "qhall/opalg/laurent_poly.hpp"

#include <algorithm>
#include <numeric>

#include "qhall/errors.hpp"

namespace qhall::opalg {

namespace {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponent& small, const Exponent& big) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i]) return false;
  }
  return true;
}

Exponent operator+(Exponent a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Exponent operator-(Exponent a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

bool valid_for(const SymbolTable& symbols, const Exponent& e) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 && !symbols[i].laurent) return false;
  }
  return true;
}

bool touches_square_rule(const SymbolTable& symbols, const LaurentPoly& p) {
  return std::any_of(symbols.square_rules().begin(), symbols.square_rules().end(),
                     [&](const SquareRule& r) { return p.depends_on(r.symbol); });
}

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

LaurentPoly::LaurentPoly(SymbolTablePtr symbols) : symbols_(std::move(symbols)) {
  if (!symbols_) throw DeclarationError("LaurentPoly without a symbol table");
}

LaurentPoly LaurentPoly::constant(SymbolTablePtr symbols, const GaussianRational& c) {
  LaurentPoly p(std::move(symbols));
  p.add_term(Exponent(p.symbols_->size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::symbol(SymbolTablePtr symbols, const std::string& name, int power) {
  LaurentPoly p(std::move(symbols));
  Exponent e(p.symbols_->size(), 0);
  e[p.symbols_->index_of(name)] = power;
  p.add_term(std::move(e), GaussianRational(1));
  return p;
}

LaurentPoly LaurentPoly::monomial(SymbolTablePtr symbols, Exponent exponent, const GaussianRational& c) {
  LaurentPoly p(std::move(symbols));
  p.add_term(std::move(exponent), c);
  return p;
}

std::optional<GaussianRational> LaurentPoly::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (terms_.size() == 1) {
    const auto& [e, c] = *terms_.begin();
    if (std::all_of(e.begin(), e.end(), [](int k) { return k == 0; })) return c;
  }
  return std::nullopt;
}

bool LaurentPoly::depends_on(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first[index] != 0; });
}

Exponent LaurentPoly::min_exponents() const {
  Exponent m(symbols_->size(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

void LaurentPoly::add_term(Exponent exponent, GaussianRational c) {
  if (c.is_zero()) return;
  if (exponent.size() != symbols_->size()) {
    throw DeclarationError("exponent vector does not match the symbol table");
  }
  for (const auto& rule : symbols_->square_rules()) {
    while (exponent[rule.symbol] >= 2) {
      exponent[rule.symbol] -= 2;
      for (std::size_t i = 0; i < exponent.size(); ++i) exponent[i] += rule.monomial[i];
      c *= rule.coeff;
    }
  }
  if (!valid_for(*symbols_, exponent)) {
    throw DeclarationError("negative power of a non-Laurent symbol");
  }
  auto [it, inserted] = terms_.try_emplace(std::move(exponent), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same(symbols_, o.symbols_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same(symbols_, o.symbols_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same(a.symbols_, b.symbols_);
  LaurentPoly out(a.symbols_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(symbols_, GaussianRational(1));
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Exponent& by) const {
  LaurentPoly out(symbols_);
  for (const auto& [e, c] : terms_) out.add_term(e + by, c);
  return out;
}

LaurentPoly LaurentPoly::derivative(std::size_t index) const {
  LaurentPoly out(symbols_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent d = e;
    d[index] -= 1;
    out.add_term(std::move(d), c * GaussianRational(e[index]));
  }
  return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  require_same(symbols_, divisor.symbols_);
  if (divisor.is_zero()) throw DeclarationError("division by the zero polynomial");
  if (is_zero()) return LaurentPoly(symbols_);

  if (divisor.is_monomial()) {
    const auto& [de, dc] = divisor.leading();
    GaussianRational inv = dc.inverse();
    LaurentPoly out(symbols_);
    for (const auto& [e, c] : terms_) {
      Exponent q = e - de;
      if (!valid_for(*symbols_, q)) return std::nullopt;
      out.add_term(std::move(q), c * inv);
    }
    return out;
  }
  // Quotients in Q[kappa]/(kappa^2 - r) are not handled by plain division.
  if (touches_square_rule(*symbols_, divisor)) return std::nullopt;

  // Strip monomial content so both sides are ordinary polynomials; the
  // quotient of such polynomials is again a polynomial.
  const Exponent num_shift = min_exponents();
  const Exponent den_shift = divisor.min_exponents();
  LaurentPoly rest = shifted(Exponent(num_shift.size(), 0) - num_shift);
  const LaurentPoly den = divisor.shifted(Exponent(den_shift.size(), 0) - den_shift);
  const auto& [lead_e, lead_c] = den.leading();
  const GaussianRational lead_inv = lead_c.inverse();

  LaurentPoly quotient(symbols_);
  while (!rest.is_zero()) {
    const auto& [e, c] = rest.leading();
    if (!divides(lead_e, e)) return std::nullopt;
    Exponent qe = e - lead_e;
    GaussianRational qc = c * lead_inv;
    rest -= den.shifted(qe) * qc;
    quotient.add_term(std::move(qe), std::move(qc));
  }
  Exponent back = num_shift - den_shift;
  for (const auto& [e, c] : quotient.terms_) {
    if (!valid_for(*symbols_, e + back)) return std::nullopt;
  }
  return quotient.shifted(back);
}

std::complex<double> LaurentPoly::evaluate(std::span<const std::complex<double>> values) const {
  if (values.size() != symbols_->size()) {
    throw DeclarationError("evaluation point does not match the symbol table");
  }
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && values[i] == 0.0) {
        throw SingularityError("negative power of '" + (*symbols_)[i].name + "' at zero");
      }
      term *= std::pow(values[i], e[i]);
    }
    sum += term;
  }
  return sum;
}

std::string render_term(const SymbolTable& symbols, const Exponent& e, const GaussianRational& c) {
  std::string mono;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += symbols[i].name;
    if (e[i] != 1) mono += "^" + std::to_string(e[i]);
  }
  if (mono.empty()) return c.to_string();
  if (c.is_one()) return mono;
  if (c == GaussianRational(-1)) return "-" + mono;
  if (c == GaussianRational::i()) return "i*" + mono;
  if (c == -GaussianRational::i()) return "-i*" + mono;
  return c.to_string() + "*" + mono;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c.is_real() && sgn(c.re()) < 0;
    std::string term = render_term(*symbols_, e, negative ? -c : c);
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.symbols_->same_as(*b.symbols_) && a.terms_ == b.terms_;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  GrlexLess less;
  auto ia = a.terms_.rbegin();
  auto ib = b.terms_.rbegin();
  for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
    if (less(ia->first, ib->first)) return std::strong_ordering::less;
    if (less(ib->first, ia->first)) return std::strong_ordering::greater;
    if (auto c = ia->second <=> ib->second; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

}  // namespace qhall::opalg
