#include "kslab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kslab {

namespace {

void require_uniform_triple(const State& s0, const State& s1, const State& s2) {
  const double d1 = s1.t - s0.t;
  const double d2 = s2.t - s1.t;
  if (!(d1 > 0.0) || !(d2 > 0.0) || std::abs(d1 - d2) > 1e-9 * std::max(d1, d2))
    throw std::invalid_argument("state triple must have uniform positive spacing");
}

double f_a0(const State& s, const AdmissibilityParams& p) {
  AdmissibilityParams q = p;
  q.b = 0.0;
  const FunctionalRecord r = record(s, q);
  return r.F_ab;
}

}  // namespace

IdentityReport check_ddt_identity(const State& s0, const State& s1, const State& s2,
                                  const AdmissibilityParams& p) {
  require_uniform_triple(s0, s1, s2);
  if (!(integrate(s1.u) > 0.0))
    throw std::domain_error("check_ddt_identity: u vanishes, F is degenerate");
  if (min_value(s1.u) <= 0.0)
    throw std::domain_error("check_ddt_identity: u must be strictly positive");
  if (min_value(s1.v) <= 0.0)
    throw std::domain_error("check_ddt_identity: v must be strictly positive");

  const double dt = s1.t - s0.t;
  const double lhs = (f_a0(s2, p) - f_a0(s0, p)) / (2.0 * dt);

  // Face sums. q1 ~ int |grad u|^2/u, q2a/q2b ~ int grad u.grad v/v,
  // q3a ~ int u|grad v|^2/v^2, q4 ~ int grad(u/v).grad v (the a-part of the
  // signal coupling, which splits into q2-type minus q3-type in the limit).
  const Grid& g = s1.u.grid();
  const ScalarField& u = s1.u;
  const ScalarField& v = s1.v;
  double q1 = 0, q2a = 0, q2b = 0, q3a = 0, q4 = 0;
  auto face = [&](double ul, double ur, double vl, double vr, double ih) {
    const double du = (ur - ul) * ih;
    const double dv = (vr - vl) * ih;
    const double dlnu = (std::log(ur) - std::log(ul)) * ih;
    const double dlnv = (std::log(vr) - std::log(vl)) * ih;
    const double uf = 0.5 * (ul + ur);
    const double vh = 2.0 * vl * vr / (vl + vr);
    const double chflux = uf * dv / vh;  // chemotactic flux sans chi
    q1 += du * dlnu;
    q2a += chflux * dlnu;
    q2b += dlnv * du;
    q3a += chflux * dlnv;
    q4 += (ur / vr - ul / vl) * ih * dv;
  };
  const double ihx = 1.0 / g.hx(), ihy = 1.0 / g.hy();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 1; i < g.nx; ++i)
      face(u(i - 1, j), u(i, j), v(i - 1, j), v(i, j), ihx);
  for (int j = 1; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      face(u(i, j - 1), u(i, j), v(i, j - 1), v(i, j), ihy);

  double su = 0, su2v = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    su += u[k];
    su2v += u[k] * u[k] / v[k];
  }

  const double mu = g.cell_area();
  const double rhs = mu * (-q1 + p.chi * q2a + p.a * q2b - p.a * p.chi * q3a + p.a * q4 +
                           p.a * su - p.a * su2v);

  IdentityReport rep;
  rep.name = "ddt_F_a0";
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.residual = lhs - rhs;
  rep.grid_h = std::max(g.hx(), g.hy());
  return rep;
}

IdentityReport check_sqrtv_inequality(const State& s0, const State& s1, const State& s2,
                                      double c0) {
  require_uniform_triple(s0, s1, s2);
  AdmissibilityParams p;  // only used as a record carrier
  p.chi = 1.0;
  const FunctionalRecord r0 = record(s0, p);
  const FunctionalRecord r1 = record(s1, p);
  const FunctionalRecord r2 = record(s2, p);

  const double dt = s1.t - s0.t;
  const double lhs = 4.0 * (r2.int_grad_sqrt_v_sq - r0.int_grad_sqrt_v_sq) / (2.0 * dt);

  // int grad u . grad v / v at the middle state, cell-centered.
  const Grid& g = s1.u.grid();
  const ScalarField dux = cell_dx(s1.u), duy = cell_dy(s1.u);
  const ScalarField dvx = cell_dx(s1.v), dvy = cell_dy(s1.v);
  double gugv = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      gugv += (dux(i, j) * dvx(i, j) + duy(i, j) * dvy(i, j)) / s1.v(i, j);
  gugv *= g.cell_area();

  const double rhs = -2.0 * c0 * r1.int_gradv4_over_v3 - r1.int_gradv2_over_v +
                     2.0 * gugv - r1.int_u_gradv2_over_v2;

  IdentityReport rep;
  rep.name = "ddt_grad_sqrt_v_bound";
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.residual = lhs - rhs;  // <= tol(dt,h) expected
  rep.grid_h = std::max(g.hx(), g.hy());
  return rep;
}

DissipationVerdict check_dissipation(std::span<const FunctionalRecord> series,
                                     const AdmissibilityParams& p,
                                     const VerdictConfig& vc) {
  if (series.size() < 3)
    throw std::invalid_argument("check_dissipation: need at least three samples");
  if (!(p.delta > 0.0))
    throw std::domain_error("check_dissipation: delta must be positive");
  if (!(phi_delta(p) < 0.0))
    throw std::domain_error("check_dissipation: phi_delta(a,b;chi) >= 0, premise fails");

  const double mass = series[0].mass;
  const double c = p.a * mass * (1.0 + vc.c_margin);

  DissipationVerdict best;
  best.delta = p.delta;
  best.c = c;
  best.n_samples = static_cast<int>(series.size()) - 2;
  best.max_violation = std::numeric_limits<double>::infinity();

  const double log_lo = std::log(vc.kappa_min);
  const double log_hi = std::log(vc.kappa_max);
  for (int k = 0; k < vc.kappa_count; ++k) {
    const double kappa = std::exp(log_lo + (log_hi - log_lo) * k /
                                  std::max(1, vc.kappa_count - 1));
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < series.size(); ++i) {
      const double span = series[i + 1].t - series[i - 1].t;
      const double dfdt = (series[i + 1].F_ab - series[i - 1].F_ab) / span;
      const double expr = dfdt + kappa * series[i].F_ab +
                          p.delta * series[i].int_gradu_sq_over_u - c;
      worst = std::max(worst, expr);
    }
    if (worst < best.max_violation) {
      best.max_violation = worst;
      best.kappa = kappa;
    }
  }
  best.pass = best.max_violation <= vc.tol;
  return best;
}

double ode_comparison(std::span<const double> f_values, double sample_dt, double tau) {
  if (!(sample_dt > 0.0)) throw std::invalid_argument("ode_comparison: sample_dt must be positive");
  if (!(tau > 0.0)) throw std::invalid_argument("ode_comparison: tau must be positive");
  const std::size_t n = f_values.size();
  const std::size_t w = static_cast<std::size_t>(std::llround(tau / sample_dt));
  if (w < 1 || w + 1 > n)
    throw std::invalid_argument("ode_comparison: window longer than the series");

  // Trapezoid integral over the first window, then slide.
  double window = 0.0;
  for (std::size_t i = 0; i < w; ++i)
    window += 0.5 * (f_values[i] + f_values[i + 1]) * sample_dt;
  double cmax = window;
  for (std::size_t start = 1; start + w < n; ++start) {
    window -= 0.5 * (f_values[start - 1] + f_values[start]) * sample_dt;
    window += 0.5 * (f_values[start + w - 1] + f_values[start + w]) * sample_dt;
    cmax = std::max(cmax, window);
  }
  return cmax * (1.0 + 1.0 / (1.0 - std::exp(-tau)));
}

}  // namespace kslab
