#include <array>
#include <cmath>

#include "qhall/errors.hpp"
#include "qhall/numverify.hpp"

namespace qhall::numverify {

namespace {

// Fourth-order central weights on offsets -2..2 (before dividing by h^order).
constexpr std::array<std::array<double, 5>, 3> kStencil{{
    {0, 0, 1, 0, 0},
    {1.0 / 12, -8.0 / 12, 0, 8.0 / 12, -1.0 / 12},
    {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12},
}};

std::vector<Complex> symbol_values(const DiffOp& H, const Bindings& params, std::span<const double> point) {
  const auto& table = *H.symbols();
  const auto& coords = table.coordinates();
  if (point.size() != coords.size()) throw DomainError("fd_apply: point has the wrong dimension");

  std::vector<Complex> values(table.size(), 0.0);
  for (std::size_t k = 0; k < coords.size(); ++k) values[coords[k]] = point[k];
  for (std::size_t s = 0; s < table.size(); ++s) {
    if (table[s].kind == opalg::SymbolKind::Coordinate) continue;
    auto it = params.find(table[s].name);
    if (it != params.end()) {
      values[s] = it->second;
      continue;
    }
    for (const auto& [alpha, c] : H.terms()) {
      if (c.depends_on(s)) throw DeclarationError("fd_apply: parameter '" + table[s].name + "' is not bound");
    }
  }
  return values;
}

}  // namespace

Complex fd_apply(const DiffOp& H, const Bindings& params, const Field& f, std::span<const double> point, double h) {
  if (!(h > 0.0)) throw DomainError("fd_apply: step must be positive");
  std::vector<Complex> values = symbol_values(H, params, point);
  const std::size_t dim = point.size();

  Complex total = 0.0;
  std::vector<double> shifted(point.begin(), point.end());
  for (const auto& [alpha, coeff] : H.terms()) {
    Complex c = coeff.evaluate(values);

    int order = 0;
    for (int a : alpha) {
      if (a > 2) throw DomainError("fd_apply: derivative order above 2 is not supported");
      order += a;
    }
    // Walk the 5^dim tensor stencil, skipping zero weights.
    Complex sum = 0.0;
    std::vector<int> idx(dim, 0);
    while (true) {
      double w = 1.0;
      for (std::size_t k = 0; k < dim && w != 0.0; ++k) {
        w *= kStencil[alpha[k]][idx[k]];
        shifted[k] = point[k] + (idx[k] - 2) * h;
      }
      if (w != 0.0) sum += w * f(shifted);
      std::size_t k = 0;
      while (k < dim && ++idx[k] == 5) idx[k++] = 0;
      if (k == dim) break;
    }
    total += c * sum / std::pow(h, order);
  }
  return total;
}

double residual_check(const DiffOp& H, const Bindings& params, const Field& psi, Complex E,
                      const std::vector<std::vector<double>>& points, const StepRule& step) {
  if (points.empty()) throw DomainError("residual_check: no sample points");
  double worst = 0.0;
  for (const auto& p : points) {
    Complex value = psi(p);
    Complex applied = fd_apply(H, params, psi, p, step(p));
    worst = std::max(worst, std::abs(applied - E * value) / (std::abs(E) * std::abs(value) + 1e-300));
  }
  return worst;
}

double residual_check(const DiffOp& H, const Bindings& params, const Field& psi, Complex E,
                      const std::vector<std::vector<double>>& points, double h) {
  return residual_check(H, params, psi, E, points, [h](std::span<const double>) { return h; });
}

}  // namespace qhall::numverify
