#include "kslab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "kslab/quadrature.hpp"

namespace kslab {

void SimConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("config: dt must be positive");
  if (!(t_end >= dt)) throw std::invalid_argument("config: t_end must be >= dt");
  if (!(chi > 0.0)) throw std::invalid_argument("config: chi must be positive");
  if (!(v_floor > 0.0)) throw std::invalid_argument("config: v_floor must be positive");
  if (record_every < 1) throw std::invalid_argument("config: record_every must be >= 1");
  if (!(linsolve_tol > 0.0)) throw std::invalid_argument("config: linsolve_tol must be positive");
  if (!(u_mass >= 0.0)) throw std::invalid_argument("config: u_mass must be nonnegative");
  if (!(v_base > 0.0)) throw std::invalid_argument("config: v_base must be positive");
  if (!(init_u.amplitude > -1.0))
    throw std::invalid_argument("config: init_u amplitude must exceed -1");
  if (!(v_base + std::min(0.0, init_v.amplitude) > 0.0))
    throw std::invalid_argument("config: init_v amplitude would make v0 nonpositive");
  if (!(monitor_a > 0.0) || !(monitor_b >= 0.0))
    throw std::invalid_argument("config: monitor weights need a > 0, b >= 0");
}

State initial_state(const SimConfig& cfg) {
  cfg.validate();
  State s;
  s.t = 0.0;
  const Grid& g = cfg.grid;
  ScalarField su = unit_shape(cfg.init_u.kind, g, cfg.seed);
  ScalarField sv = unit_shape(cfg.init_v.kind, g, cfg.seed + 1);

  s.u = ScalarField(g);
  if (cfg.u_mass > 0.0) {
    const double mean = cfg.u_mass / g.area();
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i)
        s.u(i, j) = mean * (1.0 + cfg.init_u.amplitude * su(i, j));
    const double m0 = integrate(s.u);
    const double fix = cfg.u_mass / m0;
    for (double& v : s.u.values()) v *= fix;
  }

  s.v = ScalarField(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      s.v(i, j) = cfg.v_base + cfg.init_v.amplitude * sv(i, j);
  return s;
}

namespace {

// out = alpha*x - dt*Lap(x), flux form.
void apply_helmholtz(double alpha, double dt, const ScalarField& x, ScalarField& out) {
  const Grid& g = x.grid();
  const double cx = dt / (g.hx() * g.hx());
  const double cy = dt / (g.hy() * g.hy());
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double c = x(i, j);
      double acc = alpha * c;
      if (i > 0) acc -= cx * (x(i - 1, j) - c);
      if (i + 1 < g.nx) acc -= cx * (x(i + 1, j) - c);
      if (j > 0) acc -= cy * (x(i, j - 1) - c);
      if (j + 1 < g.ny) acc -= cy * (x(i, j + 1) - c);
      out(i, j) = acc;
    }
  }
}

double dot(const ScalarField& a, const ScalarField& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double mean(const ScalarField& a) {
  double s = 0.0;
  for (double v : a.values()) s += v;
  return s / static_cast<double>(a.size());
}

}  // namespace

ScalarField helmholtz_solve(double alpha, double dt, const ScalarField& rhs,
                            double rel_tol, int* iterations) {
  const Grid& g = rhs.grid();
  const double mean_rhs = mean(rhs);
  const double xbar = mean_rhs / alpha;

  ScalarField b(g);
  for (std::size_t k = 0; k < rhs.size(); ++k) b[k] = rhs[k] - mean_rhs;

  ScalarField x(g, 0.0);
  const double nb2 = dot(b, b);
  if (iterations) *iterations = 0;
  if (nb2 > 0.0) {
    ScalarField r = b, p = b, Ap(g);
    double rr = nb2;
    const double stop2 = rel_tol * rel_tol * nb2;
    const int cap = 50 * (g.nx + g.ny) + 100;
    int it = 0;
    while (true) {
      apply_helmholtz(alpha, dt, p, Ap);
      const double pAp = dot(p, Ap);
      const double step = rr / pAp;
      for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] += step * p[k];
        r[k] -= step * Ap[k];
      }
      const double rr_new = dot(r, r);
      ++it;
      if (rr_new <= stop2) break;
      if (it >= cap) {
        std::ostringstream msg;
        msg << "helmholtz_solve: CG stalled after " << it
            << " iterations, residual " << std::sqrt(rr_new / nb2);
        throw SolverError(msg.str());
      }
      const double beta = rr_new / rr;
      for (std::size_t k = 0; k < p.size(); ++k) p[k] = r[k] + beta * p[k];
      rr = rr_new;
    }
    if (iterations) *iterations = it;
    const double mx = mean(x);  // re-pin the deflated mode to round-off
    for (double& v : x.values()) v -= mx;
  }
  for (double& v : x.values()) v += xbar;
  return x;
}

namespace {

State step_dt(const State& s, const SimConfig& cfg, double dt) {
  const Grid& g = s.u.grid();

  // Signal update: ((1+dt)I - dt*Lap) v_new = v + dt*u.
  ScalarField rhs_v(g);
  for (std::size_t k = 0; k < rhs_v.size(); ++k) rhs_v[k] = s.v[k] + dt * s.u[k];
  ScalarField v_new = helmholtz_solve(1.0 + dt, dt, rhs_v, cfg.linsolve_tol);

  const double vmin = min_value(v_new);
  if (vmin < cfg.v_floor) {
    std::ostringstream msg;
    msg << "v floor violated at t=" << s.t + dt << ": min v=" << vmin
        << " < v_floor=" << cfg.v_floor;
    throw SolverError(msg.str());
  }

  // Explicit chemotactic flux chi*(u/v) grad v on faces: u arithmetic mean,
  // v_new harmonic mean (keeps u/v bounded when v dips). Boundary faces zero.
  VectorField flux(g);
  const double ihx = 1.0 / g.hx(), ihy = 1.0 / g.hy();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 1; i < g.nx; ++i) {
      const double uf = 0.5 * (s.u(i - 1, j) + s.u(i, j));
      const double vl = v_new(i - 1, j), vr = v_new(i, j);
      const double vh = 2.0 * vl * vr / (vl + vr);
      flux.xf(i, j) = cfg.chi * uf * (vr - vl) * ihx / vh;
    }
  }
  for (int j = 1; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double uf = 0.5 * (s.u(i, j - 1) + s.u(i, j));
      const double vl = v_new(i, j - 1), vr = v_new(i, j);
      const double vh = 2.0 * vl * vr / (vl + vr);
      flux.yf(i, j) = cfg.chi * uf * (vr - vl) * ihy / vh;
    }
  }

  // Cell update: (I - dt*Lap) u_new = u - dt*div(flux).
  ScalarField div_flux = divergence(flux);
  ScalarField rhs_u(g);
  for (std::size_t k = 0; k < rhs_u.size(); ++k) rhs_u[k] = s.u[k] - dt * div_flux[k];
  ScalarField u_new = helmholtz_solve(1.0, dt, rhs_u, cfg.linsolve_tol);

  const double umin = min_value(u_new);
  const double umax = max_value(u_new);
  if (umin < -1e-8 * std::max(1.0, umax)) {
    std::ostringstream msg;
    msg << "u turned significantly negative at t=" << s.t + dt << ": min u=" << umin
        << " (advective step too large)";
    throw SolverError(msg.str());
  }

  State out;
  out.u = std::move(u_new);
  out.v = std::move(v_new);
  out.t = s.t + dt;
  return out;
}

}  // namespace

State step(const State& s, const SimConfig& cfg) { return step_dt(s, cfg, cfg.dt); }

double advective_dt_bound(const State& s, double chi) {
  const Grid& g = s.v.grid();
  double gmax = 0.0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 1; i < g.nx; ++i)
      gmax = std::max(gmax, std::abs(s.v(i, j) - s.v(i - 1, j)) / g.hx());
  for (int j = 1; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      gmax = std::max(gmax, std::abs(s.v(i, j) - s.v(i, j - 1)) / g.hy());
  const double vmin = min_value(s.v);
  if (gmax <= 0.0 || chi <= 0.0 || vmin <= 0.0)
    return std::numeric_limits<double>::infinity();
  const double h = std::min(g.hx(), g.hy());
  return h * h * vmin / (4.0 * chi * gmax);
}

RunResult run(const SimConfig& cfg) {
  cfg.validate();
  RunResult out;
  const AdmissibilityParams mp = cfg.monitor_params();
  State s = initial_state(cfg);
  double dt = cfg.dt;

  try {
    out.series.push_back(record(s, mp));
    long step_i = 0;
    while (s.t < cfg.t_end * (1.0 - 1e-12)) {
      if (cfg.adaptive_dt && step_i % 100 == 0) {
        const double bound = advective_dt_bound(s, cfg.chi);
        while (dt > bound && out.dt_halvings < 40) {
          dt *= 0.5;
          ++out.dt_halvings;
        }
      }
      const double dt_step = std::min(dt, cfg.t_end - s.t);
      s = step_dt(s, cfg, dt_step);
      ++step_i;
      const bool last = s.t >= cfg.t_end * (1.0 - 1e-12);
      if (step_i % cfg.record_every == 0 || last) out.series.push_back(record(s, mp));
    }
    out.steps = step_i;
    out.status = RunStatus::kOk;
  } catch (const std::exception& e) {
    out.status = RunStatus::kAborted;
    out.message = e.what();
  }
  out.final = std::move(s);
  out.dt_used = dt;
  return out;
}

double eta_lower_bound(const EtaInputs& in) {
  if (!(in.m >= 0.0)) throw std::domain_error("eta_lower_bound: m must be nonnegative");
  if (!(in.inf_v0 > 0.0)) throw std::domain_error("eta_lower_bound: inf_v0 must be positive");
  if (!(in.tau > 0.0)) throw std::domain_error("eta_lower_bound: tau must be positive");
  if (!(in.diam > 0.0)) throw std::domain_error("eta_lower_bound: diam must be positive");
  if (in.dim != 2) throw std::domain_error("eta_lower_bound: only dim = 2 is supported");
  if (in.m == 0.0) return 0.0;

  const double d2 = in.diam * in.diam;
  // Below r_lo the exponent is under -700 and the integrand underflows.
  const double r_lo = std::max(std::numeric_limits<double>::min(), d2 / (4.0 * 700.0));
  double integral = 0.0;
  if (r_lo < in.tau) {
    const double pi4 = 4.0 * 3.14159265358979323846;
    auto f = [&](double r) { return std::exp(-(r + d2 / (4.0 * r))) / (pi4 * r); };
    integral = integrate_adaptive(f, r_lo, in.tau, 1e-13, 0.0).value;
  }
  return std::min(0.5 * in.inf_v0, in.m * integral);
}

bool check_v_floor(std::span<const FunctionalRecord> series, double eta) {
  const double floor = eta * (1.0 - 0.01);
  for (const FunctionalRecord& r : series)
    if (r.min_v < floor) return false;
  return true;
}

}  // namespace kslab
