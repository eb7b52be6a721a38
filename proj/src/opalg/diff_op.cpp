#include "qhall/opalg/diff_op.hpp"

#include <numeric>

#include "qhall/errors.hpp"

namespace qhall::opalg {

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Calls fn(gamma) for every gamma <= alpha componentwise.
template <typename Fn>
void for_each_below(const MultiIndex& alpha, Fn&& fn) {
  MultiIndex gamma(alpha.size(), 0);
  while (true) {
    fn(gamma);
    std::size_t k = 0;
    while (k < gamma.size()) {
      if (gamma[k] < alpha[k]) {
        ++gamma[k];
        break;
      }
      gamma[k] = 0;
      ++k;
    }
    if (k == gamma.size()) return;
  }
}

}  // namespace

DiffOp::DiffOp(SymbolTablePtr symbols) : symbols_(std::move(symbols)) {
  if (!symbols_) throw DeclarationError("DiffOp without a symbol table");
}

DiffOp::DiffOp(const RationalFunc& f) : symbols_(f.symbols()) {
  add(MultiIndex(symbols_->coordinates().size(), 0), f);
}

DiffOp DiffOp::derivative(SymbolTablePtr symbols, const std::string& name, int order) {
  std::size_t slot = symbols->coordinate_slot(symbols->index_of(name));
  DiffOp op(symbols);
  MultiIndex alpha(symbols->coordinates().size(), 0);
  alpha[slot] = order;
  op.add(std::move(alpha), RationalFunc::constant(symbols, GaussianRational(1)));
  return op;
}

DiffOp DiffOp::identity(SymbolTablePtr symbols) {
  return DiffOp(RationalFunc::constant(std::move(symbols), GaussianRational(1)));
}

int DiffOp::order() const {
  int best = 0;
  for (const auto& [alpha, c] : terms_) {
    best = std::max(best, std::accumulate(alpha.begin(), alpha.end(), 0));
  }
  return best;
}

RationalFunc DiffOp::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? RationalFunc(symbols_) : it->second;
}

void DiffOp::add(MultiIndex alpha, const RationalFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    terms_.emplace(std::move(alpha), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  require_same(symbols_, o.symbols_);
  for (const auto& [alpha, c] : o.terms_) add(alpha, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  require_same(symbols_, o.symbols_);
  for (const auto& [alpha, c] : o.terms_) add(alpha, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, coeff] : terms_) coeff *= c;
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp out = *this;
  for (auto& [alpha, c] : out.terms_) c = -c;
  return out;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  require_same(a.symbols_, b.symbols_);
  const auto& coords = a.symbols_->coordinates();
  DiffOp out(a.symbols_);
  for (const auto& [beta, cb] : b.terms_) {
    // Derivatives of cb are shared by every term of a.
    std::map<MultiIndex, RationalFunc> cache;
    auto derived = [&](const MultiIndex& gamma) -> const RationalFunc& {
      auto it = cache.find(gamma);
      if (it != cache.end()) return it->second;
      RationalFunc d = cb;
      for (std::size_t k = 0; k < gamma.size(); ++k) {
        for (int r = 0; r < gamma[k]; ++r) d = d.derivative(coords[k]);
      }
      return cache.emplace(gamma, std::move(d)).first->second;
    };
    for (const auto& [alpha, ca] : a.terms_) {
      for_each_below(alpha, [&](const MultiIndex& gamma) {
        long weight = 1;
        MultiIndex mono(alpha.size());
        for (std::size_t k = 0; k < alpha.size(); ++k) {
          weight *= binomial(alpha[k], gamma[k]);
          mono[k] = alpha[k] - gamma[k] + beta[k];
        }
        const RationalFunc& dc = derived(gamma);
        if (dc.is_zero()) return;
        out.add(std::move(mono), ca * dc * GaussianRational(weight));
      });
    }
  }
  return out;
}

RationalFunc DiffOp::apply(const RationalFunc& f) const {
  require_same(symbols_, f.symbols());
  const auto& coords = symbols_->coordinates();
  RationalFunc out(symbols_);
  for (const auto& [alpha, c] : terms_) {
    RationalFunc d = f;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      for (int r = 0; r < alpha[k]; ++r) d = d.derivative(coords[k]);
    }
    out += c * d;
  }
  return out;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  const auto& coords = symbols_->coordinates();
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [alpha, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      if (alpha[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "D" + (*symbols_)[coords[k]].name;
      if (alpha[k] != 1) mono += "^" + std::to_string(alpha[k]);
    }
    if (!out.empty()) out += " + ";
    std::string coeff = c.to_string();
    if (mono.empty()) {
      out += "(" + coeff + ")";
    } else if (c.is_polynomial() && c.num().constant_value() && c.num().constant_value()->is_one()) {
      out += mono;
    } else {
      out += "(" + coeff + ")*" + mono;
    }
  }
  return out;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) { return a * b; }

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

bool equals(const DiffOp& a, const DiffOp& b) {
  require_same(a.symbols(), b.symbols());
  DiffOp diff = a - b;
  for (const auto& [alpha, c] : diff.terms()) {
    if (!c.equals(RationalFunc(a.symbols()))) return false;
  }
  return true;
}

LaurentPoly apply_poly(const DiffOp& a, const LaurentPoly& f) {
  RationalFunc image = a.apply(RationalFunc(f));
  if (!image.is_polynomial()) {
    throw DeclarationError("image " + image.to_string() + " is not a Laurent polynomial");
  }
  return image.num();
}

DiffOp power(const DiffOp& a, unsigned n) {
  DiffOp out = DiffOp::identity(a.symbols());
  for (unsigned k = 0; k < n; ++k) out = out * a;
  return out;
}

DiffOp change_variables(const DiffOp& op, const SymbolTablePtr& target,
                        std::span<const RationalFunc> coordinate_images,
                        std::span<const DiffOp> derivative_images) {
  const auto& coords = op.symbols()->coordinates();
  if (derivative_images.size() != coords.size()) {
    throw DeclarationError("change_variables needs one derivative image per coordinate");
  }
  for (const auto& d : derivative_images) require_same(d.symbols(), target);
  DiffOp out(target);
  for (const auto& [alpha, c] : op.terms()) {
    DiffOp term(c.substitute(target, coordinate_images));
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      term = term * power(derivative_images[k], static_cast<unsigned>(alpha[k]));
    }
    out += term;
  }
  return out;
}

DiffOp rebind(const DiffOp& op, const SymbolTablePtr& target) {
  const auto& source = *op.symbols();
  std::vector<RationalFunc> images;
  for (const auto& s : source.symbols()) {
    const auto& t = (*target)[target->index_of(s.name)];
    if (t.kind != s.kind) throw DeclarationError("rebind: '" + s.name + "' changes role");
    images.push_back(RationalFunc::symbol(target, s.name));
  }
  std::vector<DiffOp> derivatives;
  for (std::size_t k : source.coordinates()) {
    derivatives.push_back(DiffOp::derivative(target, source[k].name));
  }
  return change_variables(op, target, images, derivatives);
}

}  // namespace qhall::opalg
