#pragma once

#include "kslab/field.hpp"

namespace kslab {

/// Simulation state: cell density u (>= 0), signal v (> 0), time t.
struct State {
  ScalarField u;
  ScalarField v;
  double t = 0.0;
};

}  // namespace kslab
