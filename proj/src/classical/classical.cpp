#include "qhall/classical.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <utility>

#include "qhall/errors.hpp"

namespace qhall::classical {

namespace {

void require_domain(const PhaseState& s) {
  if (!(s.y > 0.0)) throw DomainError("phase state has y <= 0");
  if (!std::isfinite(s.x) || !std::isfinite(s.y) || !std::isfinite(s.px) || !std::isfinite(s.py)) {
    throw DomainError("phase state is not finite");
  }
}

PhaseState advance(const PhaseState& s, const std::array<double, 4>& k, double h) {
  return {s.t + h, s.x + h * k[0], s.y + h * k[1], s.px + h * k[2], s.py + h * k[3]};
}

double drift(double now, double start) {
  double d = std::abs(now - start);
  return start != 0.0 ? d / std::abs(start) : d;
}

}  // namespace

std::array<double, 4> hamilton_rhs(const PhaseState& s, double a, double beta) {
  require_domain(s);
  const double inv = 1.0 / (2.0 * a * a);
  return {(s.y * s.y * s.px + beta * s.y) * inv, s.y * s.y * s.py * inv, 0.0,
          -(s.y * (s.px * s.px + s.py * s.py) + beta * s.px) * inv};
}

Trajectory integrate_rk4(const PhaseState& s0, double a, double beta, double dt, long steps) {
  if (!(dt > 0.0)) throw DomainError("integrate_rk4: dt must be positive");
  if (steps < 0) throw DomainError("integrate_rk4: steps must be nonnegative");
  require_domain(s0);

  Trajectory traj{a, beta, dt, {}, false};
  traj.states.reserve(static_cast<std::size_t>(steps) + 1);
  traj.states.push_back(s0);
  PhaseState s = s0;
  for (long n = 0; n < steps; ++n) {
    PhaseState next;
    try {
      auto k1 = hamilton_rhs(s, a, beta);
      auto k2 = hamilton_rhs(advance(s, k1, dt / 2), a, beta);
      auto k3 = hamilton_rhs(advance(s, k2, dt / 2), a, beta);
      auto k4 = hamilton_rhs(advance(s, k3, dt), a, beta);
      std::array<double, 4> k;
      for (int i = 0; i < 4; ++i) k[i] = (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]) / 6.0;
      next = advance(s, k, dt);
      next.t = s0.t + (n + 1) * dt;
      require_domain(next);
    } catch (const DomainError&) {
      traj.domain_exit = true;
      break;
    }
    s = next;
    traj.states.push_back(s);
  }
  return traj;
}

ConservedValues conserved_values(const PhaseState& s, double a, double beta) {
  require_domain(s);
  ConservedValues v;
  v.H = (s.y * s.y * (s.px * s.px + s.py * s.py) + 2 * beta * s.y * s.px + beta * beta) / (4 * a * a);
  v.L1 = s.x * s.px + s.y * s.py;
  v.L2 = s.px;
  v.L2_printed = s.py;
  v.L3 = (s.y * s.y - s.x * s.x) * s.px - 2 * s.x * s.y * s.py + 2 * beta * s.y;
  return v;
}

double DriftSummary::max() const { return std::max({H, L1, L2, L3}); }

DriftSummary conserved_drift(const Trajectory& traj) {
  DriftSummary d;
  if (traj.states.empty()) return d;
  ConservedValues start = conserved_values(traj.states.front(), traj.a, traj.beta);
  for (const auto& s : traj.states) {
    ConservedValues v = conserved_values(s, traj.a, traj.beta);
    d.H = std::max(d.H, drift(v.H, start.H));
    d.L1 = std::max(d.L1, drift(v.L1, start.L1));
    d.L2 = std::max(d.L2, drift(v.L2, start.L2));
    d.L3 = std::max(d.L3, drift(v.L3, start.L3));
  }
  return d;
}

CircleFit circle_fit(const std::vector<PhaseState>& states) {
  std::set<std::pair<double, double>> distinct;
  for (const auto& s : states) distinct.emplace(s.x, s.y);
  if (distinct.size() < 10) throw DomainError("circle_fit: need at least 10 distinct points");

  // Minimize sum (x^2 + y^2 + D x + E y + F)^2, centered for conditioning.
  const Eigen::Index n = static_cast<Eigen::Index>(states.size());
  double mx = 0.0, my = 0.0;
  for (const auto& s : states) {
    mx += s.x;
    my += s.y;
  }
  mx /= n;
  my /= n;
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double u = states[i].x - mx, v = states[i].y - my;
    A.row(i) << u, v, 1.0;
    b(i) = -(u * u + v * v);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(1e-10);
  if (qr.rank() < 3) throw FitSingularError("circle_fit: points are collinear or degenerate");
  Eigen::Vector3d sol = qr.solve(b);

  double cu = -sol(0) / 2, cv = -sol(1) / 2;
  double r2 = cu * cu + cv * cv - sol(2);
  if (!(r2 > 0.0)) throw FitSingularError("circle_fit: no real circle fits the points");

  CircleFit fit{cu + mx, cv + my, std::sqrt(r2), 0.0};
  double ss = 0.0;
  for (const auto& s : states) {
    double e = std::hypot(s.x - fit.cx, s.y - fit.cy) - fit.r;
    ss += e * e;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

bool is_bounded(const PhaseState& s, double beta) {
  double k2 = (s.y * s.px + beta) * (s.y * s.px + beta) + s.y * s.y * s.py * s.py;
  return beta * beta > k2;
}

double orbit_period(const PhaseState& s, double a, double beta) {
  if (!is_bounded(s, beta)) throw DomainError("orbit_period: the orbit is not bounded");
  double k2 = (s.y * s.px + beta) * (s.y * s.px + beta) + s.y * s.y * s.py * s.py;
  return 4 * std::numbers::pi * a * a / std::sqrt(beta * beta - k2);
}

double convergence_order(const PhaseState& s0, double a, double beta, double t_end, const std::vector<double>& dts) {
  if (dts.size() < 2) throw DomainError("convergence_order: need at least two step sizes");
  auto final_state = [&](double dt) {
    long steps = std::lround(t_end / dt);
    Trajectory traj = integrate_rk4(s0, a, beta, t_end / steps, steps);
    if (traj.domain_exit) throw DomainError("convergence_order: orbit left the domain");
    return traj.states.back();
  };
  PhaseState ref = final_state(*std::min_element(dts.begin(), dts.end()) / 16);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double dt : dts) {
    PhaseState s = final_state(dt);
    double err = std::sqrt(std::pow(s.x - ref.x, 2) + std::pow(s.y - ref.y, 2) + std::pow(s.px - ref.px, 2) +
                           std::pow(s.py - ref.py, 2));
    double lx = std::log(dt), ly = std::log(err);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double n = static_cast<double>(dts.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string to_csv(const Trajectory& traj) {
  std::ostringstream out;
  out.precision(17);
  out << "t,x,y,px,py,H,L1,L2,L3\n";
  for (const auto& s : traj.states) {
    ConservedValues v = conserved_values(s, traj.a, traj.beta);
    out << s.t << ',' << s.x << ',' << s.y << ',' << s.px << ',' << s.py << ',' << v.H << ',' << v.L1 << ','
        << v.L2 << ',' << v.L3 << '\n';
  }
  return out.str();
}

}  // namespace qhall::classical
