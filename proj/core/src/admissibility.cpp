#include "kslab/admissibility.hpp"

#include <algorithm>
#include <stdexcept>

namespace kslab {

void AdmissibilityParams::validate() const {
  if (!(a > 0.0)) throw std::domain_error("admissibility: a must be positive");
  if (!(b >= 0.0)) throw std::domain_error("admissibility: b must be nonnegative");
  if (!(chi > 0.0)) throw std::domain_error("admissibility: chi must be positive");
  if (!(c0 > 0.0)) throw std::domain_error("admissibility: c0 must be positive");
  if (!(delta >= 0.0 && delta < 1.0)) throw std::domain_error("admissibility: delta must lie in [0,1)");
}

double phi_delta(const AdmissibilityParams& p) {
  if (!(p.a > 0.0)) throw std::domain_error("phi: a must be positive");
  if (!(p.delta >= 0.0 && p.delta < 1.0)) throw std::domain_error("phi_delta: delta must lie in [0,1)");
  const double om = 1.0 - p.delta;
  const double s = p.chi + 2.0 * p.a + 0.5 * p.b;
  const double bracket = s * s / (4.0 * om) - p.a * p.chi - p.a - 0.25 * p.b;
  const double pos = bracket > 0.0 ? bracket : 0.0;
  return pos * pos / (4.0 * p.a * om) - 0.5 * p.b * p.c0;
}

double phi(const AdmissibilityParams& p) {
  AdmissibilityParams q = p;
  q.delta = 0.0;
  return phi_delta(q);
}

double phi_expanded(const AdmissibilityParams& p) {
  if (!(p.a > 0.0)) throw std::domain_error("phi_expanded: a must be positive");
  const double e = p.chi * p.chi + 4.0 * p.a * p.a + 0.25 * p.b * p.b +
                   p.b * p.chi + 2.0 * p.a * p.b - 4.0 * p.a - p.b;
  const double pos = e > 0.0 ? e : 0.0;
  return (pos * pos - 32.0 * p.a * p.b * p.c0) / (64.0 * p.a);
}

double phi_db_at_zero(double a, double chi, double c0) {
  if (!(a > 0.0)) throw std::domain_error("phi_db_at_zero: a must be positive");
  if (!(chi > 0.0)) throw std::domain_error("phi_db_at_zero: chi must be positive");
  // With E(b) = chi^2 + 4a^2 + b^2/4 + b chi + 2ab - 4a - b, phi's squared
  // part is E_+^2/(64a). At b = 0+ its derivative is E(0) E'(0)/(32a) when
  // E(0) > 0 and zero otherwise (also at E(0) = 0 exactly).
  const double e0 = chi * chi + 4.0 * a * a - 4.0 * a;
  const double de = chi + 2.0 * a - 1.0;
  const double dsq = e0 > 0.0 ? e0 * de / (32.0 * a) : 0.0;
  return dsq - 0.5 * c0;
}

void SearchConfig::validate() const {
  if (!(a_min > 0.0) || !(a_max > a_min))
    throw std::invalid_argument("search window: need 0 < a_min < a_max");
  if (!(b_min >= 0.0) || !(b_max > b_min))
    throw std::invalid_argument("search window: need 0 <= b_min < b_max");
  if (!(resolution > 0.0)) throw std::invalid_argument("search window: resolution must be positive");
  if (refine_rounds < 0) throw std::invalid_argument("search window: refine_rounds must be >= 0");
}

namespace {

inline double phi_fast(double a, double b, double chi, double c0) {
  const double s = chi + 2.0 * a + 0.5 * b;
  const double bracket = s * s * 0.25 - a * chi - a - 0.25 * b;
  const double pos = bracket > 0.0 ? bracket : 0.0;
  return pos * pos / (4.0 * a) - 0.5 * b * c0;
}

}  // namespace

AdmissibilityReport feasible_ab(double chi, double c0, const SearchConfig& sc) {
  if (!(chi > 0.0)) throw std::domain_error("feasible_ab: chi must be positive");
  if (!(c0 >= 0.0)) throw std::domain_error("feasible_ab: c0 must be nonnegative");
  sc.validate();

  const int na = static_cast<int>((sc.a_max - sc.a_min) / sc.resolution) + 1;
  const int nb = static_cast<int>((sc.b_max - sc.b_min) / sc.resolution) + 1;

  double best_a = sc.a_min, best_b = sc.b_min;
  double best = phi_fast(best_a, best_b, chi, c0);
  for (int ia = 0; ia < na; ++ia) {
    const double a = std::min(sc.a_min + ia * sc.resolution, sc.a_max);
    for (int ib = 0; ib < nb; ++ib) {
      const double b = std::min(sc.b_min + ib * sc.resolution, sc.b_max);
      const double v = phi_fast(a, b, chi, c0);
      if (v < best) {
        best = v;
        best_a = a;
        best_b = b;
      }
    }
  }

  // Coordinate descent around the best grid point, halving the step each round.
  double step = sc.resolution;
  for (int round = 0; round < sc.refine_rounds; ++round) {
    step *= 0.5;
    bool moved = true;
    int guard = 0;
    while (moved && guard++ < 200) {
      moved = false;
      const double ca[2] = {std::max(sc.a_min, best_a - step), std::min(sc.a_max, best_a + step)};
      for (double a : ca) {
        const double v = phi_fast(a, best_b, chi, c0);
        if (v < best) { best = v; best_a = a; moved = true; }
      }
      const double cb[2] = {std::max(sc.b_min, best_b - step), std::min(sc.b_max, best_b + step)};
      for (double b : cb) {
        const double v = phi_fast(best_a, b, chi, c0);
        if (v < best) { best = v; best_b = b; moved = true; }
      }
    }
  }

  AdmissibilityReport rep;
  rep.chi = chi;
  rep.best_a = best_a;
  rep.best_b = best_b;
  rep.best_phi = best;
  rep.feasible = best < 0.0;
  rep.search_resolution = sc.resolution;
  return rep;
}

ChiZeroResult chi_zero(double c0, double tol, const SearchConfig& sc) {
  if (!(tol > 0.0)) throw std::invalid_argument("chi_zero: tol must be positive");
  sc.validate();

  ChiZeroResult res;
  double lo = 0.5;
  AdmissibilityReport rep_lo = feasible_ab(lo, c0, sc);
  if (!rep_lo.feasible) return res;  // nothing feasible in the initial bracket

  double hi = 4.0;
  AdmissibilityReport rep_hi = feasible_ab(hi, c0, sc);
  int expansions = 0;
  while (rep_hi.feasible && expansions++ < 12) {
    lo = hi;
    rep_lo = rep_hi;
    hi *= 2.0;
    rep_hi = feasible_ab(hi, c0, sc);
  }
  if (rep_hi.feasible) return res;  // no infeasible top found; give up

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    AdmissibilityReport rep = feasible_ab(mid, c0, sc);
    if (rep.feasible) {
      lo = mid;
      rep_lo = rep;
    } else {
      hi = mid;
    }
  }

  res.found = true;
  res.chi0 = 0.5 * (lo + hi);
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  res.witness = rep_lo;
  return res;
}

double largest_feasible_delta(double a, double b, double chi, double c0) {
  AdmissibilityParams p{a, b, chi, c0, 0.0};
  for (double d = 0.5; d > 1e-12; d *= 0.5) {
    p.delta = d;
    if (phi_delta(p) < 0.0) return d;
  }
  return 0.0;
}

}  // namespace kslab
