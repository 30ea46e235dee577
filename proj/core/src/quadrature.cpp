#include "kslab/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace kslab {

namespace {

// 15-point Kronrod extension of 7-point Gauss (nonnegative abscissae).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelEstimate {
  double kronrod;
  double gauss;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b, int& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double k = 0.0, g = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kXgk[i];
    double fsum;
    if (i == 7) {
      fsum = f(c);
      evals += 1;
    } else {
      fsum = f(c - dx) + f(c + dx);
      evals += 2;
    }
    k += kWgk[i] * fsum;
    if (i % 2 == 1) g += kWg[i / 2] * fsum;  // odd Kronrod nodes are the Gauss nodes
  }
  return {k * h, g * h};
}

struct Accum {
  double value = 0.0;
  double error = 0.0;
  int evals = 0;
  bool converged = true;
};

void refine(const std::function<double(double)>& f, double a, double b, double tol,
            int depth, int max_depth, Accum& acc) {
  PanelEstimate e = gk15(f, a, b, acc.evals);
  const double err = std::abs(e.kronrod - e.gauss);
  if (err <= tol || depth >= max_depth) {
    acc.value += e.kronrod;
    acc.error += err;
    if (err > tol) acc.converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  refine(f, a, mid, 0.5 * tol, depth + 1, max_depth, acc);
  refine(f, mid, b, 0.5 * tol, depth + 1, max_depth, acc);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol, double abs_tol, int max_depth) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  int rough_evals = 0;
  // Coarse composite pass to anchor the relative tolerance.
  double rough = 0.0;
  constexpr int kRoughPanels = 8;
  for (int i = 0; i < kRoughPanels; ++i) {
    const double lo = a + (b - a) * i / kRoughPanels;
    const double hi = a + (b - a) * (i + 1) / kRoughPanels;
    rough += gk15(f, lo, hi, rough_evals).kronrod;
  }
  const double tol = std::max(abs_tol, rel_tol * std::abs(rough));

  Accum acc;
  refine(f, a, b, std::max(tol, 1e-305), 0, max_depth, acc);
  out.value = acc.value;
  out.error_estimate = acc.error;
  out.evaluations = acc.evals + rough_evals;
  out.converged = acc.converged;
  return out;
}

}  // namespace kslab
