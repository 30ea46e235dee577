#pragma once

#include <cmath>

namespace kslab {

/// Constant of the Hessian-vs-gradient bound int w|D^2 ln w|^2 >= c0 int |grad w|^4 / w^3.
inline const double kDefaultC0 = 1.0 / ((2.0 + std::sqrt(2.0)) * (2.0 + std::sqrt(2.0)));

/// Parameters of the admissibility function phi(a,b;chi) and its deflated
/// variant phi_delta. a weighs int u ln v, b weighs int |grad sqrt(v)|^2.
struct AdmissibilityParams {
  double a = 0.5;
  double b = 0.0;
  double chi = 1.0;
  double c0 = kDefaultC0;
  double delta = 0.0;

  void validate() const;
};

/// phi(a,b;chi) = (1/(4a)) ((chi+2a+b/2)^2/4 - a*chi - a - b/4)_+^2 - b c0/2.
/// The positive part applies before squaring; x_+ = max(x,0).
double phi(const AdmissibilityParams& p);

/// Algebraically identical expanded form,
/// (1/(64a)) ((chi^2+4a^2+b^2/4+b*chi+2ab-4a-b)_+^2 - 32 a b c0),
/// kept as an independent cross-check of phi.
double phi_expanded(const AdmissibilityParams& p);

/// Deflated variant with both 1/(4a(1-delta)) and 1/(4(1-delta)) factors.
/// phi_delta with delta = 0 evaluates the exact same operations as phi.
double phi_delta(const AdmissibilityParams& p);

/// Analytic one-sided derivative d/db phi(a,b;chi) at b = 0+.
double phi_db_at_zero(double a, double chi, double c0 = kDefaultC0);

struct SearchConfig {
  double a_min = 0.01;
  double a_max = 2.0;
  double b_min = 0.0;
  double b_max = 2.0;
  double resolution = 1e-3;
  int refine_rounds = 3;

  void validate() const;
};

struct AdmissibilityReport {
  double chi = 0.0;
  bool feasible = false;
  double best_a = 0.0;
  double best_b = 0.0;
  double best_phi = 0.0;
  double search_resolution = 0.0;
};

/// Uniform grid scan over the (a,b) window followed by coordinate-descent
/// refinement around the best grid point. Deterministic for a fixed config.
/// feasible is true iff a point with phi < 0 was found.
AdmissibilityReport feasible_ab(double chi, double c0 = kDefaultC0,
                                const SearchConfig& search = {});

struct ChiZeroResult {
  bool found = false;
  double chi0 = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  AdmissibilityReport witness;  // report at the last feasible chi
};

/// Bisection on chi over the feasible_ab predicate. The initial bracket is
/// [0.5, 4], expanded upward while the top stays feasible. found is false
/// when no feasible chi exists at the bottom of the bracket (e.g. c0 = 0,
/// where phi >= 0 everywhere).
ChiZeroResult chi_zero(double c0 = kDefaultC0, double tol = 1e-4,
                       const SearchConfig& search = {});

/// Largest delta in {1/2, 1/4, ...} with phi_delta(a,b;chi) < 0, or 0 if
/// none is found down to 2^-40.
double largest_feasible_delta(double a, double b, double chi, double c0 = kDefaultC0);

}  // namespace kslab
