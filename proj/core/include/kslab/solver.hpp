#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kslab/admissibility.hpp"
#include "kslab/field.hpp"
#include "kslab/functionals.hpp"
#include "kslab/state.hpp"

namespace kslab {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InitSpec {
  FieldKind kind = FieldKind::kConstPlusCos;
  double amplitude = 0.0;
};

struct SimConfig {
  Grid grid{64, 64, 1.0, 1.0};
  double dt = 2e-4;
  double t_end = 1.0;
  double chi = 1.0;
  InitSpec init_u{FieldKind::kConstPlusCos, 0.5};
  double u_mass = 1.0;   // total initial mass of u (0 gives u identically 0)
  InitSpec init_v{FieldKind::kConstPlusCos, 0.1};
  double v_base = 2.0;   // additive floor of v0
  double v_floor = 1e-8;
  int record_every = 10;
  double linsolve_tol = 1e-10;
  bool adaptive_dt = true;
  int checkpoint_every = 0;  // records between checkpoints written by the CLI; 0 = none
  std::uint64_t seed = 0;
  double monitor_a = 0.5;  // F_{a,b} weights sampled along the run
  double monitor_b = 0.0;

  AdmissibilityParams monitor_params() const {
    return AdmissibilityParams{monitor_a, monitor_b, chi, kDefaultC0, 0.0};
  }
  void validate() const;
};

/// u0 = (m/|Omega|)(1 + A*shape), rescaled so the discrete mass is exactly
/// u_mass; v0 = v_base + A*shape with shape in [0,1].
State initial_state(const SimConfig& cfg);

/// One IMEX step. The v update solves ((1+dt)I - dt*Lap) v_new = v + dt*u
/// (positivity-preserving M-matrix system); the u update treats the diffusive
/// flux implicitly and the chemotactic flux -chi*(u/v) grad v explicitly in
/// flux form, u at faces by arithmetic mean and v_new at faces by harmonic
/// mean. Boundary fluxes vanish, so the discrete mass of u is conserved.
/// Throws SolverError if min v_new < v_floor or the linear solve stalls.
State step(const State& s, const SimConfig& cfg);

enum class RunStatus { kOk, kAborted };

struct RunResult {
  std::vector<FunctionalRecord> series;
  State final;
  RunStatus status = RunStatus::kOk;
  std::string message;
  double dt_used = 0.0;
  int dt_halvings = 0;
  long steps = 0;

  bool ok() const { return status == RunStatus::kOk; }
};

/// Time-steps to t_end, sampling a FunctionalRecord every record_every steps
/// (t = 0 and t = t_end always included). Aborts cleanly with a partial
/// series on solver errors. When adaptive_dt is set, the advective stability
/// bound is re-estimated every 100 steps and dt halves on violation.
RunResult run(const SimConfig& cfg);

/// Solves (alpha*I - dt*Lap) x = rhs with matrix-free conjugate gradients.
/// The constant mode (eigenvalue alpha) is deflated and handled exactly, so
/// the mean of the solution is correct to round-off independent of rel_tol.
ScalarField helmholtz_solve(double alpha, double dt, const ScalarField& rhs,
                            double rel_tol, int* iterations = nullptr);

/// Explicit-chemotaxis step-size bound min(hx,hy)^2 * min(v) / (4 chi max|grad v|).
double advective_dt_bound(const State& s, double chi);

struct EtaInputs {
  double m = 0.0;       // lower bound for int of the signal source (mass of u)
  double inf_v0 = 1.0;
  double tau = 1.0;
  double diam = 1.0;
  int dim = 2;
};

/// Positive floor for v from the Neumann heat-kernel estimate:
/// eta = min{ inf v0 / 2, m * int_0^tau (4 pi r)^{-1} exp(-(r + d^2/(4r))) dr }.
/// The integrand vanishes superexponentially as r -> 0+; integration starts
/// where the exponent is still representable.
double eta_lower_bound(const EtaInputs& in);

/// True iff min v >= eta*(1 - 0.01) at every sample (the 1% slack absorbs
/// discretization error).
bool check_v_floor(std::span<const FunctionalRecord> series, double eta);

}  // namespace kslab
