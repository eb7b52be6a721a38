#include "qhall/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qhall/errors.hpp"

namespace qhall::specfun {

namespace {

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

}  // namespace

double pochhammer(double tau, unsigned n) {
  double p = 1.0;
  for (unsigned k = 0; k < n; ++k) p *= tau + k;
  return p;
}

double laguerre(unsigned n, double tau, double z) {
  // Extended precision absorbs the cancellation between terms for z >> n.
  long double prev = 1.0L;
  if (n == 0) return 1.0;
  long double cur = 1.0L + tau - z;
  for (unsigned k = 2; k <= n; ++k) {
    long double next = ((2.0L * k - 1.0L + tau - z) * cur - (k - 1.0L + tau) * prev) / k;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

SeriesResult hyp1f1(double alpha, double b, double z, double tol) {
  if (!std::isfinite(alpha) || !std::isfinite(b) || !std::isfinite(z)) {
    throw DomainError("hyp1f1: non-finite argument");
  }

  if (is_nonpositive_integer(alpha)) {
    const int last = static_cast<int>(-alpha);
    if (is_nonpositive_integer(b) && -b < last) {
      throw PoleError("hyp1f1: b = " + std::to_string(b) + " is a pole before the series terminates");
    }
    long double term = 1.0L, sum = 1.0L;
    for (int k = 0; k < last; ++k) {
      term *= (alpha + k) * static_cast<long double>(z) / ((b + k) * (k + 1.0L));
      sum += term;
    }
    return {static_cast<double>(sum), last + 1, true, 0.0};
  }
  if (is_nonpositive_integer(b)) {
    throw PoleError("hyp1f1: b = " + std::to_string(b) + " is a nonpositive integer");
  }

  // Once k exceeds -alpha and -b, every later term ratio is at most
  // |z|/(k+1) * max(1, (alpha+k)/(b+k)), so the tail is geometric.
  const double settled = std::max({0.0, -alpha, -b});
  long double term = 1.0L, sum = 1.0L;
  for (int k = 0; k + 1 < kSeriesTermCap; ++k) {
    term *= (alpha + k) * static_cast<long double>(z) / ((b + k) * (k + 1.0L));
    sum += term;
    const int n = k + 1;
    if (term == 0.0L) return {static_cast<double>(sum), n + 1, true, 0.0};
    if (n <= settled) continue;
    double ratio = std::abs(z) / (n + 1) * std::max(1.0, (alpha + n) / (b + n));
    if (ratio >= 1.0) continue;
    double tail = static_cast<double>(std::abs(term)) * ratio / (1.0 - ratio);
    if (tail <= tol) return {static_cast<double>(sum), n + 1, true, tail};
  }
  throw ConvergenceError("hyp1f1: no convergence within " + std::to_string(kSeriesTermCap) + " terms");
}

double whittaker_m(double beta, double n, double s, double tol) {
  if (!(s > 0.0)) throw DomainError("whittaker_m: s must be positive");
  SeriesResult f = hyp1f1(0.5 + n - beta, 1.0 + 2.0 * n, s, tol);
  return std::exp(-0.5 * s) * std::pow(s, 0.5 + n) * f.value;
}

}  // namespace qhall::specfun
