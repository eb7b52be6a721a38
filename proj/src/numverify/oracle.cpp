#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "qhall/errors.hpp"
#include "qhall/numverify.hpp"
#include "qhall/spectra.hpp"

namespace qhall::numverify {

std::size_t sturm_count(const std::vector<double>& diag, const std::vector<double>& offdiag, double x) {
  const double tiny = std::numeric_limits<double>::min();
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double e2 = i > 0 ? offdiag[i - 1] * offdiag[i - 1] : 0.0;
    q = (diag[i] - x) - (i > 0 ? e2 / q : 0.0);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> tridiag_eigs(const std::vector<double>& diag, const std::vector<double>& offdiag, std::size_t k) {
  const std::size_t n = diag.size();
  if (n == 0 || k == 0) throw DomainError("tridiag_eigs: need a nonempty matrix and k >= 1");
  if (offdiag.size() + 1 != n) throw DomainError("tridiag_eigs: off-diagonal must have n - 1 entries");
  k = std::min(k, n);
  if (n == 1) return {diag[0]};

  // Gershgorin interval.
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(offdiag[i - 1]) : 0.0) + (i + 1 < n ? std::abs(offdiag[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  lo -= 1.0;
  hi += 1.0;

  std::vector<double> eigs(k);
  for (std::size_t j = 0; j < k; ++j) {
    double a = j > 0 ? eigs[j - 1] - 1e-12 : lo, b = hi;
    while (b - a > 1e-12) {
      double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(diag, offdiag, mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
    }
    eigs[j] = 0.5 * (a + b);
  }
  return eigs;
}

void FDGrid::validate() const {
  if (!(s_min > 0.0 && s_min < s_max)) throw DomainError("FDGrid: need 0 < s_min < s_max");
  if (n_points < 100) throw DomainError("FDGrid: need at least 100 points");
}

OracleSpectrum whittaker_oracle(double beta, const FDGrid& grid, int levels, double m, double a) {
  grid.validate();
  if (!(beta > 0.5)) throw DomainError("whittaker_oracle: beta must exceed 1/2");
  if (levels < 1 || levels > spectra::halfplane_level_count(beta)) {
    throw DomainError("whittaker_oracle: levels must lie in 1..level count");
  }

  const int n = grid.n_points;
  const double h = grid.spacing();
  std::vector<double> diag(n), off(n - 1);
  for (int i = 0; i < n; ++i) {
    double s = grid.s_min + (i + 1) * h;
    diag[i] = s * s * (2.0 / (h * h) + 0.25 - beta / s);
    if (i + 1 < n) off[i] = -s * (s + h) / (h * h);
  }

  OracleSpectrum out;
  out.beta = beta;
  out.grid = grid;
  out.bound_count = sturm_count(diag, off, 0.25);
  if (out.bound_count < static_cast<std::size_t>(levels)) {
    throw ResolutionError("whittaker_oracle: only " + std::to_string(out.bound_count) +
                          " eigenvalues below 1/4 on this grid, " + std::to_string(levels) + " requested");
  }
  out.mu = tridiag_eigs(diag, off, levels);
  for (int l = 0; l < levels; ++l) {
    double e = (out.mu[l] + beta * beta) / (2.0 * m * a * a);
    double exact = spectra::landau_halfplane(beta, l, m, a).energy;
    out.energies.push_back(e);
    out.analytic.push_back(exact);
    out.relerr.push_back(std::abs(e - exact) / std::abs(exact));
  }
  return out;
}

std::string OracleSpectrum::to_json() const {
  nlohmann::ordered_json doc{{"beta", beta},
                             {"grid", {{"smin", grid.s_min}, {"smax", grid.s_max}, {"n", grid.n_points}}},
                             {"mu", mu},
                             {"energies", energies},
                             {"analytic", analytic},
                             {"relerr", relerr}};
  return doc.dump(2);
}

}  // namespace qhall::numverify
