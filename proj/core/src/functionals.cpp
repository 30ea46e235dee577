#include "kslab/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace kslab {

FunctionalRecord record(const State& s, const AdmissibilityParams& p) {
  const Grid& g = s.u.grid();
  if (!(s.v.grid() == g)) throw std::invalid_argument("record: u and v live on different grids");

  FunctionalRecord r;
  r.t = s.t;
  r.min_v = min_value(s.v);
  r.min_u = min_value(s.u);
  if (r.min_v <= 0.0) throw std::domain_error("record: v must be strictly positive");
  if (r.min_u < -1e-12) throw std::domain_error("record: u has negative values below -1e-12");

  const ScalarField dux = cell_dx(s.u), duy = cell_dy(s.u);
  const ScalarField dvx = cell_dx(s.v), dvy = cell_dy(s.v);

  double mass = 0, ulnu = 0, ulnv = 0, gsv = 0, guu = 0, u2v = 0;
  double gv4 = 0, ugv2 = 0, gv2v = 0, gv2 = 0, vpow = 0, usq = 0;
  const double two_a = 2.0 * p.a;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double u = std::max(s.u(i, j), 0.0);
      const double v = s.v(i, j);
      const double gu2 = dux(i, j) * dux(i, j) + duy(i, j) * duy(i, j);
      const double gvv = dvx(i, j) * dvx(i, j) + dvy(i, j) * dvy(i, j);
      mass += u;
      if (u > 0.0) {
        ulnu += u * std::log(u);
        guu += gu2 / u;
      }
      ulnv += u * std::log(v);
      gsv += gvv / (4.0 * v);
      u2v += u * u / v;
      gv4 += gvv * gvv / (v * v * v);
      ugv2 += u * gvv / (v * v);
      gv2v += gvv / v;
      gv2 += gvv;
      vpow += std::pow(v, two_a);
      usq += u * u;
    }
  }
  const double mu = g.cell_area();
  r.mass = mu * mass;
  r.int_u_ln_u = mu * ulnu;
  r.int_u_ln_v = mu * ulnv;
  r.int_grad_sqrt_v_sq = mu * gsv;
  r.int_gradu_sq_over_u = mu * guu;
  r.int_u2_over_v = mu * u2v;
  r.int_gradv4_over_v3 = mu * gv4;
  r.int_u_gradv2_over_v2 = mu * ugv2;
  r.int_gradv2_over_v = mu * gv2v;
  r.int_gradv_sq = mu * gv2;
  r.int_v_pow = mu * vpow;
  r.int_u_sq = mu * usq;
  r.F_ab = r.int_u_ln_u - p.a * r.int_u_ln_v + p.b * r.int_grad_sqrt_v_sq;
  return r;
}

namespace {

struct PointwiseTerms {
  double w_d2lnw_sq = 0;      // int w |D^2 ln w|^2
  double d2w_sq_over_w = 0;   // int |D^2 w|^2 / w
  double gw2_lapw_w2 = 0;     // int |grad w|^2 Lap w / w^2
  double gw4_w3 = 0;          // int |grad w|^4 / w^3
  double lapw_sq_over_w = 0;  // int |Lap w|^2 / w
};

PointwiseTerms integral_terms(const ScalarField& w) {
  if (min_value(w) <= 0.0)
    throw std::domain_error("identity check: field must be strictly positive");
  const Grid& g = w.grid();
  const ScalarField wx = cell_dx(w), wy = cell_dy(w);
  const ScalarField wxx = cell_dxx(w), wyy = cell_dyy(w), wxy = cell_dxy(w);
  const ScalarField hln = hessian_log_frobenius_sq(w);

  PointwiseTerms t;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double wv = w(i, j);
      const double g2 = wx(i, j) * wx(i, j) + wy(i, j) * wy(i, j);
      const double lap = wxx(i, j) + wyy(i, j);
      const double h2 = wxx(i, j) * wxx(i, j) + 2.0 * wxy(i, j) * wxy(i, j) +
                        wyy(i, j) * wyy(i, j);
      t.w_d2lnw_sq += wv * hln(i, j);
      t.d2w_sq_over_w += h2 / wv;
      t.gw2_lapw_w2 += g2 * lap / (wv * wv);
      t.gw4_w3 += g2 * g2 / (wv * wv * wv);
      t.lapw_sq_over_w += lap * lap / wv;
    }
  }
  const double mu = g.cell_area();
  t.w_d2lnw_sq *= mu;
  t.d2w_sq_over_w *= mu;
  t.gw2_lapw_w2 *= mu;
  t.gw4_w3 *= mu;
  t.lapw_sq_over_w *= mu;
  return t;
}

}  // namespace

IdentityReport check_pointwise_identity(const ScalarField& w) {
  const PointwiseTerms t = integral_terms(w);
  IdentityReport rep;
  rep.name = "pointwise_log_hessian";
  rep.lhs = t.w_d2lnw_sq;
  rep.rhs = t.d2w_sq_over_w + t.gw2_lapw_w2 - t.gw4_w3;
  rep.residual = rep.lhs - rep.rhs;
  rep.grid_h = std::max(w.grid().hx(), w.grid().hy());
  return rep;
}

LaplaceCheck check_laplace_identity(const ScalarField& w) {
  const PointwiseTerms t = integral_terms(w);
  const double h = std::max(w.grid().hx(), w.grid().hy());

  LaplaceCheck out;
  out.identity.name = "laplace_vs_hessian";
  out.identity.lhs = -t.lapw_sq_over_w;
  out.identity.rhs = -t.d2w_sq_over_w - 1.5 * t.gw2_lapw_w2 + t.gw4_w3;
  out.identity.residual = out.identity.lhs - out.identity.rhs;
  out.identity.grid_h = h;
  out.identity.note = "boundary term dropped (zero normal derivative field)";

  out.convexity.name = "laplace_convexity_bound";
  out.convexity.lhs = -t.lapw_sq_over_w;
  out.convexity.rhs = -t.w_d2lnw_sq - 0.5 * t.gw2_lapw_w2;
  out.convexity.residual = out.convexity.lhs - out.convexity.rhs;
  out.convexity.grid_h = h;
  return out;
}

IdentityReport check_c0_inequality(const ScalarField& w, double c0) {
  const PointwiseTerms t = integral_terms(w);
  IdentityReport rep;
  rep.name = "c0_hessian_bound";
  rep.lhs = t.w_d2lnw_sq;
  rep.rhs = c0 * t.gw4_w3;
  rep.residual = rep.lhs - rep.rhs;  // slack; expected >= -tol(h)
  rep.grid_h = std::max(w.grid().hx(), w.grid().hy());
  return rep;
}

double jensen_lower_bound(const FunctionalRecord& rec, const AdmissibilityParams&,
                          double sup_int_v2a) {
  const double m = rec.mass;
  if (!(m > 0.0)) throw std::domain_error("jensen_lower_bound: mass must be positive");
  if (!(sup_int_v2a > 0.0))
    throw std::domain_error("jensen_lower_bound: sup int v^{2a} must be positive");
  return -0.5 * m * std::log(m) + 0.5 * m * std::log(sup_int_v2a);
}

UlnDomination check_uln_domination(const FunctionalRecord& rec, double a,
                                   double delta, double c_delta) {
  UlnDomination d;
  d.slack = delta * rec.int_u2_over_v + c_delta - (rec.int_u_ln_u - a * rec.int_u_ln_v);
  d.holds = d.slack >= 0.0;
  return d;
}

}  // namespace kslab
