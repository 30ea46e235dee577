#pragma once

#include <cmath>
#include <stdexcept>

namespace kslab {

/// Cell-centered uniform grid on the rectangle (0,lx) x (0,ly).
/// Cell (i,j) has center ((i+1/2)hx, (j+1/2)hy); i runs fastest in memory.
struct Grid {
  int nx = 0;
  int ny = 0;
  double lx = 0.0;
  double ly = 0.0;

  Grid() = default;
  Grid(int nx_, int ny_, double lx_, double ly_)
      : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
    if (nx < 4 || ny < 4) throw std::invalid_argument("Grid: nx and ny must be >= 4");
    if (!(lx > 0.0) || !(ly > 0.0)) throw std::invalid_argument("Grid: lx and ly must be positive");
  }

  double hx() const { return lx / nx; }
  double hy() const { return ly / ny; }
  double cell_area() const { return hx() * hy(); }
  double area() const { return lx * ly; }
  double diameter() const { return std::hypot(lx, ly); }
  int cells() const { return nx * ny; }

  double x(int i) const { return (i + 0.5) * hx(); }
  double y(int j) const { return (j + 0.5) * hy(); }

  int index(int i, int j) const { return i + nx * j; }

  friend bool operator==(const Grid&, const Grid&) = default;
};

}  // namespace kslab
