#include <cmath>
#include <limits>

#include "qhall/errors.hpp"
#include "qhall/numverify.hpp"
#include "qhall/spectra.hpp"

namespace qhall::numverify {

namespace {

struct Simpson {
  const std::function<double(double)>& f;
  int max_depth;

  double step(double lo, double hi, double flo, double fmid, double fhi, double whole, double tol, int depth) const {
    double mid = 0.5 * (lo + hi);
    double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    double flm = f(lm), frm = f(rm);
    double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    double delta = left + right - whole;
    if (depth >= max_depth || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return step(lo, mid, flo, flm, fmid, left, 0.5 * tol, depth + 1) +
           step(mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi, double tol, int max_depth) {
  double flo = f(lo), fhi = f(hi), fmid = f(0.5 * (lo + hi));
  double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  return Simpson{f, max_depth}.step(lo, hi, flo, fmid, fhi, whole, tol, 0);
}

double norm_quadrature(const std::function<Complex(double, double)>& psi, double beta, long l, double c, double a,
                       double cutoff) {
  if (!(beta - l > 0.5)) {
    throw NonNormalizableError("|psi|^2 a^2/y^2 is not integrable at y = 0 when beta - l <= 1/2");
  }
  if (l < 0) throw NoBoundStateError("norm_quadrature: l must be nonnegative");
  if (!(c > 0.0)) throw DomainError("norm_quadrature: c must be positive");

  // Near 0 the integrand is y^(2 beta - 2l - 2); y = t^p makes it O(t) in t.
  const double p = std::max(1.0, 2.0 / (2.0 * beta - 2.0 * l - 1.0));
  const double degree = 2.0 * beta - 2.0;
  const double y_max = cutoff > 0.0 ? cutoff : (degree + 40.0) / c;
  const double t_max = std::pow(y_max, 1.0 / p);

  auto integrand = [&](double t) {
    if (t <= 0.0) return 0.0;
    double y = std::pow(t, p);
    if (y <= 0.0) return 0.0;
    return std::norm(psi(0.0, y)) * a * a / (y * y) * p * std::pow(t, p - 1.0);
  };

  // Scale the absolute tolerance by a coarse estimate of the integral.
  double coarse = 0.0;
  const int samples = 256;
  for (int i = 1; i < samples; ++i) coarse += integrand(t_max * i / samples);
  coarse *= t_max / samples;
  double tol = 1e-13 * std::max(coarse, std::numeric_limits<double>::min());

  // Split into panels so the first Simpson estimate cannot miss the peak.
  double total = 0.0;
  const int panels = 64;
  for (int i = 0; i < panels; ++i) {
    total += adaptive_simpson(integrand, t_max * i / panels, t_max * (i + 1) / panels, tol / panels);
  }
  return total;
}

double norm_quadrature(double beta, long l, double c, double a, double cutoff) {
  if (!(beta - l > 0.5)) {
    throw NonNormalizableError("|psi|^2 a^2/y^2 is not integrable at y = 0 when beta - l <= 1/2");
  }
  if (l < 0) throw NoBoundStateError("norm_quadrature: l must be nonnegative");
  auto psi = [&](double x, double y) { return spectra::eigenfunction_halfplane(beta, l, c, x, y); };
  return norm_quadrature(psi, beta, l, c, a, cutoff);
}

}  // namespace qhall::numverify
