#include "qhall/geometry.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "qhall/errors.hpp"

namespace qhall::geometry {

using opalg::GaussianRational;
using opalg::Symbol;
using opalg::SymbolKind;
using opalg::SymbolTable;

namespace {

const GaussianRational I = GaussianRational::i();

RationalFunc sym(const SymbolTablePtr& t, const char* name) { return RationalFunc::symbol(t, name); }

std::string scale_symbol(MetricKind kind) {
  switch (kind) {
    case MetricKind::HalfPlane:
      return "a";
    case MetricKind::Disk:
      return "rho";
    case MetricKind::Flat:
      break;
  }
  return {};
}

}  // namespace

std::string to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::Flat:
      return "flat";
    case MetricKind::HalfPlane:
      return "halfplane";
    case MetricKind::Disk:
      return "disk";
  }
  return "?";
}

SymbolTablePtr symbols_for(MetricKind kind) {
  static const SymbolTablePtr flat = SymbolTable::make({
      {"x", SymbolKind::Coordinate, false},
      {"y", SymbolKind::Coordinate, false},
      {"m", SymbolKind::Parameter, true},
      {"B", SymbolKind::Parameter, false},
  });
  static const SymbolTablePtr halfplane = SymbolTable::make({
      {"x", SymbolKind::Coordinate, false},
      {"y", SymbolKind::Coordinate, true},
      {"beta", SymbolKind::Parameter, false},
      {"a", SymbolKind::Parameter, true},
      {"m", SymbolKind::Parameter, true},
  });
  static const SymbolTablePtr disk = SymbolTable::make({
      {"x", SymbolKind::Coordinate, false},
      {"y", SymbolKind::Coordinate, false},
      {"rho", SymbolKind::Parameter, true},
      {"B", SymbolKind::Parameter, false},
      {"m", SymbolKind::Parameter, true},
  });
  switch (kind) {
    case MetricKind::Flat:
      return flat;
    case MetricKind::HalfPlane:
      return halfplane;
    case MetricKind::Disk:
      return disk;
  }
  return flat;
}

RationalFunc disk_phi() {
  auto t = symbols_for(MetricKind::Disk);
  RationalFunc x = sym(t, "x"), y = sym(t, "y");
  RationalFunc inv_rho2 = RationalFunc::symbol(t, "rho", -2);
  return RationalFunc::constant(t, 1) - (x * x + y * y) * inv_rho2;
}

bool Metric2D::contains(double x, double y) const {
  switch (kind) {
    case MetricKind::Flat:
      return std::isfinite(x) && std::isfinite(y);
    case MetricKind::HalfPlane:
      return y > 0.0 && std::isfinite(x) && std::isfinite(y);
    case MetricKind::Disk:
      return x * x + y * y < scale * scale;
  }
  return false;
}

Metric2D make_metric(MetricKind kind, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DomainError("metric scale must be positive, got " + std::to_string(scale));
  }
  auto t = symbols_for(kind);
  Metric2D metric{kind, RationalFunc::constant(t, 1), scale};
  switch (kind) {
    case MetricKind::Flat:
      break;
    case MetricKind::HalfPlane:
      metric.factor = sym(t, "a") / sym(t, "y");
      break;
    case MetricKind::Disk:
      metric.factor = disk_phi().inverse();
      break;
  }
  return metric;
}

GaugePotential zero_gauge(const SymbolTablePtr& symbols) {
  return {RationalFunc(symbols), RationalFunc(symbols)};
}

GaugePotential halfplane_gauge() {
  auto t = symbols_for(MetricKind::HalfPlane);
  return {-sym(t, "beta") / sym(t, "y"), RationalFunc(t)};
}

GaugePotential disk_gauge() {
  auto t = symbols_for(MetricKind::Disk);
  RationalFunc b = sym(t, "B");
  return {b * sym(t, "y"), -(b * sym(t, "x"))};
}

std::pair<DiffOp, DiffOp> dewitt_momenta(const Metric2D& metric) {
  const auto& t = metric.symbols();
  RationalFunc sg = metric.sqrt_det();
  std::array<DiffOp, 2> p{DiffOp(t), DiffOp(t)};
  const char* names[2] = {"x", "y"};
  for (int j = 0; j < 2; ++j) {
    std::size_t k = t->index_of(names[j]);
    RationalFunc half_log_derivative = sg.derivative(k) / sg * GaussianRational::fraction(1, 2);
    p[j] = -I * (DiffOp::derivative(t, names[j]) + DiffOp(half_log_derivative));
  }
  return {p[0], p[1]};
}

DiffOp laplace_beltrami(const Metric2D& metric, const GaugePotential& gauge,
                        const RationalFunc& mass, Ordering ordering) {
  const auto& t = metric.symbols();
  opalg::require_same(t, gauge.ax.symbols());
  opalg::require_same(t, gauge.ay.symbols());
  opalg::require_same(t, mass.symbols());

  auto [px, py] = dewitt_momenta(metric);
  DiffOp Px = px - DiffOp(gauge.ax);
  DiffOp Py = py - DiffOp(gauge.ay);
  RationalFunc half_inv_mass = mass.inverse() * GaussianRational::fraction(1, 2);
  RationalFunc sg = metric.sqrt_det();

  switch (ordering) {
    case Ordering::Divergence: {
      DiffOp middle(sg * metric.inverse_component());
      return DiffOp(half_inv_mass / sg) * (Px * middle * Px + Py * middle * Py);
    }
    case Ordering::Sandwich: {
      DiffOp outer(metric.factor.inverse());
      return DiffOp(half_inv_mass) * outer * (Px * Px + Py * Py) * outer;
    }
    case Ordering::MetricRight:
      return DiffOp(half_inv_mass) * (Px * Px + Py * Py) * DiffOp(metric.inverse_component());
  }
  return DiffOp(t);
}

double scalar_curvature_fd(const Metric2D& metric, std::array<double, 2> point, double step) {
  if (!(step > 0.0)) throw DomainError("curvature stencil step must be positive");
  const auto& t = metric.symbols();
  std::vector<std::complex<double>> values(t->size(), 1.0);
  std::string scale_name = scale_symbol(metric.kind);
  if (!scale_name.empty()) values[t->index_of(scale_name)] = metric.scale;
  const std::size_t ix = t->index_of("x");
  const std::size_t iy = t->index_of("y");

  auto log_factor = [&](double x, double y) {
    if (!metric.contains(x, y)) {
      throw DomainError("curvature stencil leaves the domain at (" + std::to_string(x) + ", "
                        + std::to_string(y) + ")");
    }
    values[ix] = x;
    values[iy] = y;
    return std::log(metric.factor.evaluate(values).real());
  };
  const double x = point[0];
  const double y = point[1];
  const double u0 = log_factor(x, y);
  const double lap = (log_factor(x + step, y) + log_factor(x - step, y) + log_factor(x, y + step)
                      + log_factor(x, y - step) - 4.0 * u0)
                     / (step * step);
  const double gaussian = -std::exp(-2.0 * u0) * lap;
  return 2.0 * gaussian;
}

double scalar_curvature_exact(const Metric2D& metric) {
  switch (metric.kind) {
    case MetricKind::Flat:
      return 0.0;
    case MetricKind::HalfPlane:
      return -2.0 / (metric.scale * metric.scale);
    case MetricKind::Disk:
      return -8.0 / (metric.scale * metric.scale);
  }
  return 0.0;
}

}  // namespace qhall::geometry
