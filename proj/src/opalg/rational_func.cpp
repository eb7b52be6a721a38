#include "qhall/opalg/rational_func.hpp"

#include <algorithm>

#include "qhall/errors.hpp"

namespace qhall::opalg {

namespace {

Exponent negated(Exponent e) {
  for (int& k : e) k = -k;
  return e;
}

}  // namespace

RationalFunc::RationalFunc(SymbolTablePtr symbols) : num_(std::move(symbols)) {}

RationalFunc::RationalFunc(LaurentPoly num) : num_(std::move(num)) {}

RationalFunc RationalFunc::constant(SymbolTablePtr symbols, const GaussianRational& c) {
  return RationalFunc(LaurentPoly::constant(std::move(symbols), c));
}

RationalFunc RationalFunc::symbol(SymbolTablePtr symbols, const std::string& name, int power) {
  const auto& table = *symbols;
  std::size_t k = table.index_of(name);
  if (power >= 0 || table[k].laurent) {
    return RationalFunc(LaurentPoly::symbol(std::move(symbols), name, power));
  }
  return RationalFunc(LaurentPoly::constant(symbols, GaussianRational(1)))
      / RationalFunc(LaurentPoly::symbol(symbols, name, -power));
}

RationalFunc RationalFunc::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  require_same(num.symbols(), den.symbols());
  if (den.is_zero()) throw DeclarationError("rational function with zero denominator");
  const auto& table = *num.symbols();

  // Split den = c * x^shift * base with base a monic polynomial free of
  // monomial content.
  Exponent shift = den.min_exponents();
  for (std::size_t i = 0; i < shift.size(); ++i) {
    if (shift[i] > 0 && !table[i].laurent) shift[i] = 0;
  }
  LaurentPoly base = den.shifted(negated(shift));
  // Whatever monomial content is left lives in non-Laurent symbols; it
  // becomes a factor of its own.
  Exponent content = base.min_exponents();
  base = base.shifted(negated(content));
  GaussianRational lead_inv = base.leading().second.inverse();
  base *= lead_inv;

  RationalFunc out(num.shifted(negated(shift)) * lead_inv);
  if (std::any_of(content.begin(), content.end(), [](int k) { return k != 0; })) {
    out.insert_factor(LaurentPoly::monomial(num.symbols(), content, GaussianRational(1)), 1);
  }
  if (!base.is_monomial()) out.insert_factor(std::move(base), 1);
  out.cancel();
  return out;
}

LaurentPoly RationalFunc::den() const {
  LaurentPoly d = LaurentPoly::constant(symbols(), GaussianRational(1));
  for (const auto& f : den_) d *= f.base.pow(static_cast<unsigned>(f.power));
  return d;
}

bool RationalFunc::depends_on(std::size_t index) const {
  if (num_.depends_on(index)) return true;
  return std::any_of(den_.begin(), den_.end(), [&](const Factor& f) { return f.base.depends_on(index); });
}

void RationalFunc::insert_factor(LaurentPoly base, int power) {
  auto it = std::lower_bound(den_.begin(), den_.end(), base,
                             [](const Factor& f, const LaurentPoly& b) { return f.base < b; });
  if (it != den_.end() && it->base == base) {
    it->power += power;
  } else {
    den_.insert(it, Factor{std::move(base), power});
  }
}

void RationalFunc::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    while (f.power > 0) {
      auto q = num_.divide_exact(f.base);
      if (!q) break;
      num_ = std::move(*q);
      --f.power;
    }
  }
  std::erase_if(den_, [](const Factor& f) { return f.power == 0; });
}

RationalFunc RationalFunc::inverse() const {
  if (num_.is_zero()) throw DeclarationError("inverse of the zero rational function");
  RationalFunc out = fraction(den(), num_);
  return out;
}

RationalFunc RationalFunc::derivative(std::size_t index) const {
  // d(N / prod P_k^e_k) = (N' prod P_k - N sum_k e_k P_k' prod_{j!=k} P_j) / prod P_k^(e_k+1)
  LaurentPoly dn = num_.derivative(index);
  if (den_.empty()) return RationalFunc(std::move(dn));

  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < den_.size(); ++k) {
    if (den_[k].base.depends_on(index)) active.push_back(k);
  }
  RationalFunc out(symbols());
  if (active.empty()) {
    out.num_ = std::move(dn);
    out.den_ = den_;
  } else {
    LaurentPoly prod_all = LaurentPoly::constant(symbols(), GaussianRational(1));
    for (std::size_t k : active) prod_all *= den_[k].base;
    LaurentPoly top = dn * prod_all;
    for (std::size_t k : active) {
      LaurentPoly others = LaurentPoly::constant(symbols(), GaussianRational(1));
      for (std::size_t j : active) {
        if (j != k) others *= den_[j].base;
      }
      top -= num_ * den_[k].base.derivative(index) * others * GaussianRational(den_[k].power);
    }
    out.num_ = std::move(top);
    out.den_ = den_;
    for (std::size_t k : active) out.den_[k].power += 1;
  }
  out.cancel();
  return out;
}

RationalFunc RationalFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RationalFunc result = constant(symbols(), GaussianRational(1));
  for (int k = 0; k < n; ++k) result *= *this;
  return result;
}

RationalFunc& RationalFunc::operator+=(const RationalFunc& o) {
  require_same(symbols(), o.symbols());
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;

  // Common denominator: every factor at its larger power.
  std::vector<Factor> common = den_;
  for (const auto& f : o.den_) {
    auto it = std::find_if(common.begin(), common.end(), [&](const Factor& c) { return c.base == f.base; });
    if (it == common.end()) {
      common.push_back(f);
    } else {
      it->power = std::max(it->power, f.power);
    }
  }
  auto lifted = [&](const RationalFunc& r) {
    LaurentPoly n = r.num_;
    for (const auto& c : common) {
      int have = 0;
      for (const auto& f : r.den_) {
        if (f.base == c.base) have = f.power;
      }
      if (c.power > have) n *= c.base.pow(static_cast<unsigned>(c.power - have));
    }
    return n;
  };
  LaurentPoly sum = lifted(*this) + lifted(o);
  num_ = std::move(sum);
  den_.clear();
  for (auto& c : common) insert_factor(std::move(c.base), c.power);
  cancel();
  return *this;
}

RationalFunc& RationalFunc::operator-=(const RationalFunc& o) { return *this += -o; }

RationalFunc& RationalFunc::operator*=(const RationalFunc& o) {
  require_same(symbols(), o.symbols());
  num_ *= o.num_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (const auto& f : o.den_) insert_factor(f.base, f.power);
  cancel();
  return *this;
}

RationalFunc& RationalFunc::operator*=(const GaussianRational& c) {
  num_ *= c;
  if (num_.is_zero()) den_.clear();
  return *this;
}

RationalFunc RationalFunc::operator-() const {
  RationalFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

bool RationalFunc::equals(const RationalFunc& o) const {
  require_same(symbols(), o.symbols());
  return (num_ * o.den() - o.num_ * den()).is_zero();
}

RationalFunc RationalFunc::substitute(const SymbolTablePtr& target,
                                      std::span<const RationalFunc> images) const {
  if (images.size() != symbols()->size()) {
    throw DeclarationError("substitution needs one image per symbol");
  }
  for (const auto& img : images) require_same(img.symbols(), target);

  auto subst_poly = [&](const LaurentPoly& p) {
    RationalFunc acc(target);
    for (const auto& [e, c] : p.terms()) {
      RationalFunc term = constant(target, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) term *= images[i].pow(e[i]);
      }
      acc += term;
    }
    return acc;
  };
  RationalFunc out = subst_poly(num_);
  for (const auto& f : den_) out /= subst_poly(f.base).pow(f.power);
  return out;
}

std::complex<double> RationalFunc::evaluate(std::span<const std::complex<double>> values) const {
  std::complex<double> n = num_.evaluate(values);
  std::complex<double> d = 1.0;
  for (const auto& f : den_) d *= std::pow(f.base.evaluate(values), f.power);
  if (d == 0.0) throw SingularityError("rational function evaluated at a pole");
  return n / d;
}

std::string RationalFunc::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string out = "(" + num_.to_string() + ")/(";
  for (std::size_t k = 0; k < den_.size(); ++k) {
    if (k > 0) out += "*";
    out += "(" + den_[k].base.to_string() + ")";
    if (den_[k].power != 1) out += "^" + std::to_string(den_[k].power);
  }
  return out + ")";
}

}  // namespace qhall::opalg
