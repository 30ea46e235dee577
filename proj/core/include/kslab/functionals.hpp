#pragma once

#include <string>

#include "kslab/admissibility.hpp"
#include "kslab/field.hpp"
#include "kslab/state.hpp"

namespace kslab {

/// One time sample of every monitored integral quantity. F_ab is assembled
/// from its three summands, so the definitional identity
///   F_ab = int_u_ln_u - a*int_u_ln_v + b*int_grad_sqrt_v_sq
/// holds by construction.
struct FunctionalRecord {
  double t = 0.0;
  double mass = 0.0;                  // int u
  double F_ab = 0.0;
  double int_u_ln_u = 0.0;            // 0*ln 0 := 0
  double int_u_ln_v = 0.0;
  double int_grad_sqrt_v_sq = 0.0;    // int |grad sqrt v|^2 = int |grad v|^2/(4v)
  double int_gradu_sq_over_u = 0.0;
  double int_u2_over_v = 0.0;
  double int_gradv4_over_v3 = 0.0;
  double int_u_gradv2_over_v2 = 0.0;
  double int_gradv2_over_v = 0.0;
  double int_gradv_sq = 0.0;
  double int_v_pow = 0.0;             // int v^{2a}
  double int_u_sq = 0.0;
  double min_v = 0.0;
  double min_u = 0.0;
};

struct IdentityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // always lhs - rhs
  double grid_h = 0.0;
  std::string note;
};

/// Evaluate all monitored integrals on a state. Throws std::domain_error if
/// min v <= 0 or any u < -1e-12; u values in [-1e-12, 0) are clamped to 0 in
/// the u-weighted integrands. Cells with u <= 0 and a nonzero gradient
/// contribute zero to int |grad u|^2/u (min_u records the violation).
FunctionalRecord record(const State& s, const AdmissibilityParams& p);

/// Residual of
///   int w|D^2 ln w|^2 = int |D^2 w|^2/w + int |grad w|^2 Lap w / w^2
///                       - int |grad w|^4/w^3
/// on a positive Neumann field, both sides by midpoint quadrature.
IdentityReport check_pointwise_identity(const ScalarField& w);

struct LaplaceCheck {
  IdentityReport identity;    // equality form, boundary integral dropped
  IdentityReport convexity;   // inequality form; residual = lhs - rhs <= tol expected
};

/// identity:  -int |Lap w|^2/w = -int |D^2 w|^2/w - (3/2) int |grad w|^2 Lap w/w^2
///                               + int |grad w|^4/w^3
/// (the boundary integral (1/2) oint (1/w) d_nu |grad w|^2 vanishes for the
/// manufactured mirror-symmetric fields and is omitted; see note).
/// convexity: -int |Lap w|^2/w <= -int w|D^2 ln w|^2 - (1/2) int |grad w|^2 Lap w/w^2,
/// reported with lhs/rhs in that order, so residual <= tol(h) is the pass test.
LaplaceCheck check_laplace_identity(const ScalarField& w);

/// Slack of int w|D^2 ln w|^2 >= c0 int |grad w|^4/w^3; residual = lhs - c0*rhs.
IdentityReport check_c0_inequality(const ScalarField& w, double c0 = kDefaultC0);

/// gamma = -(m/2) ln m + (m/2) ln C_{2a}, with C_{2a} an upper bound for
/// int v^{2a} along the trajectory (ordinarily its measured running maximum).
/// The caller asserts F_ab >= (1/2) int u ln u - gamma.
double jensen_lower_bound(const FunctionalRecord& rec, const AdmissibilityParams& p,
                          double sup_int_v2a);

struct UlnDomination {
  bool holds = false;
  double slack = 0.0;  // delta*int u^2/v + c_delta - (int u ln u - a int u ln v)
};

/// Tests int u ln u - a int u ln v <= delta int u^2/v + c_delta.
UlnDomination check_uln_domination(const FunctionalRecord& rec, double a,
                                   double delta, double c_delta);

}  // namespace kslab
