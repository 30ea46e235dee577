#pragma once

#include <functional>

namespace kslab {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod 7-15 integration on [a,b] with recursive interval
/// bisection. The tolerance is max(abs_tol, rel_tol*|I|) distributed over
/// subintervals by length.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double rel_tol = 1e-12,
                                    double abs_tol = 0.0,
                                    int max_depth = 48);

}  // namespace kslab
