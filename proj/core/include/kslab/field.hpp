#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kslab/grid.hpp"

namespace kslab {

/// Real-valued samples at cell centers.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(const Grid& grid, double fill = 0.0)
      : grid_(grid), values_(static_cast<std::size_t>(grid.cells()), fill) {}

  const Grid& grid() const { return grid_; }
  int nx() const { return grid_.nx; }
  int ny() const { return grid_.ny; }

  double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
  double& operator()(int i, int j) { return values_[grid_.index(i, j)]; }
  double operator[](std::size_t k) const { return values_[k]; }
  double& operator[](std::size_t k) { return values_[k]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  std::size_t size() const { return values_.size(); }

  /// Mirror lookup: an out-of-range index reflects to the adjacent interior
  /// cell. This is the ghost-cell realization of the no-flux boundary.
  double at_mirrored(int i, int j) const {
    if (i < 0) i = -1 - i;
    else if (i >= grid_.nx) i = 2 * grid_.nx - 1 - i;
    if (j < 0) j = -1 - j;
    else if (j >= grid_.ny) j = 2 * grid_.ny - 1 - j;
    return values_[grid_.index(i, j)];
  }

  bool all_finite() const;

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Face-centered vector samples: x component on the (nx+1) x ny vertical
/// faces, y component on the nx x (ny+1) horizontal faces. Boundary faces
/// stay exactly zero (no-flux).
struct VectorField {
  Grid grid;
  std::vector<double> x_values;
  std::vector<double> y_values;

  VectorField() = default;
  explicit VectorField(const Grid& g)
      : grid(g),
        x_values(static_cast<std::size_t>((g.nx + 1) * g.ny), 0.0),
        y_values(static_cast<std::size_t>(g.nx * (g.ny + 1)), 0.0) {}

  // x-face i in [0,nx], left of cell i; y-face j in [0,ny], below cell j.
  double xf(int i, int j) const { return x_values[i + (grid.nx + 1) * j]; }
  double& xf(int i, int j) { return x_values[i + (grid.nx + 1) * j]; }
  double yf(int i, int j) const { return y_values[i + grid.nx * j]; }
  double& yf(int i, int j) { return y_values[i + grid.nx * j]; }
};

enum class FieldKind { kConst, kConstPlusCos, kGaussBump, kRandomPositive };

FieldKind field_kind_from_string(const std::string& s);
std::string to_string(FieldKind k);

/// Midpoint rule: hx*hy*sum(values).
double integrate(const ScalarField& f);

/// Face-centered difference gradient; boundary faces zero.
VectorField gradient(const ScalarField& f);

/// Flux-form divergence of a face field.
ScalarField divergence(const VectorField& v);

/// Five-point flux-form Laplacian with zero boundary flux. On a uniform grid
/// this coincides with the mirrored centered stencil, and integrates to zero
/// by telescoping.
ScalarField laplacian(const ScalarField& f);

// Cell-centered derivatives via mirrored centered differences.
ScalarField cell_dx(const ScalarField& f);
ScalarField cell_dy(const ScalarField& f);
ScalarField cell_dxx(const ScalarField& f);
ScalarField cell_dyy(const ScalarField& f);
ScalarField cell_dxy(const ScalarField& f);

/// |D^2 ln w|^2 cellwise (squared Frobenius norm). Requires w > 0.
ScalarField hessian_log_frobenius_sq(const ScalarField& w);

/// Strictly positive manufactured fields whose normal derivative vanishes
/// identically on the boundary (all kinds are even about every edge, so the
/// mirrored stencils are exact extensions).
ScalarField manufactured(FieldKind kind, const Grid& grid, std::uint64_t seed = 0);

/// The same shapes rescaled to [0,1] by their analytic range; used to build
/// initial data.
ScalarField unit_shape(FieldKind kind, const Grid& grid, std::uint64_t seed = 0);

double min_value(const ScalarField& f);
double max_value(const ScalarField& f);

}  // namespace kslab
