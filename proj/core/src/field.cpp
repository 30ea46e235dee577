#include "kslab/field.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace kslab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kBumpBeta = 3.0;  // gauss_bump sharpness; min value is e^{-2*beta}
}  // namespace

bool ScalarField::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

FieldKind field_kind_from_string(const std::string& s) {
  if (s == "const") return FieldKind::kConst;
  if (s == "const_plus_cos") return FieldKind::kConstPlusCos;
  if (s == "gauss_bump") return FieldKind::kGaussBump;
  if (s == "random_positive") return FieldKind::kRandomPositive;
  throw std::invalid_argument("unknown field kind: '" + s + "'");
}

std::string to_string(FieldKind k) {
  switch (k) {
    case FieldKind::kConst: return "const";
    case FieldKind::kConstPlusCos: return "const_plus_cos";
    case FieldKind::kGaussBump: return "gauss_bump";
    case FieldKind::kRandomPositive: return "random_positive";
  }
  return "?";
}

double integrate(const ScalarField& f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  return f.grid().cell_area() * s;
}

VectorField gradient(const ScalarField& f) {
  const Grid& g = f.grid();
  VectorField out(g);
  const double ihx = 1.0 / g.hx(), ihy = 1.0 / g.hy();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 1; i < g.nx; ++i)
      out.xf(i, j) = (f(i, j) - f(i - 1, j)) * ihx;
  for (int j = 1; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out.yf(i, j) = (f(i, j) - f(i, j - 1)) * ihy;
  return out;
}

ScalarField divergence(const VectorField& v) {
  const Grid& g = v.grid;
  ScalarField out(g);
  const double ihx = 1.0 / g.hx(), ihy = 1.0 / g.hy();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out(i, j) = (v.xf(i + 1, j) - v.xf(i, j)) * ihx + (v.yf(i, j + 1) - v.yf(i, j)) * ihy;
  return out;
}

ScalarField laplacian(const ScalarField& f) {
  const Grid& g = f.grid();
  ScalarField out(g);
  const double ihx2 = 1.0 / (g.hx() * g.hx()), ihy2 = 1.0 / (g.hy() * g.hy());
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double c = f(i, j);
      const double fw = (i > 0) ? (f(i - 1, j) - c) : 0.0;          // zero flux at boundary
      const double fe = (i + 1 < g.nx) ? (f(i + 1, j) - c) : 0.0;
      const double fs = (j > 0) ? (f(i, j - 1) - c) : 0.0;
      const double fn = (j + 1 < g.ny) ? (f(i, j + 1) - c) : 0.0;
      out(i, j) = (fw + fe) * ihx2 + (fs + fn) * ihy2;
    }
  }
  return out;
}

ScalarField cell_dx(const ScalarField& f) {
  const Grid& g = f.grid();
  ScalarField out(g);
  const double c = 0.5 / g.hx();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out(i, j) = (f.at_mirrored(i + 1, j) - f.at_mirrored(i - 1, j)) * c;
  return out;
}

ScalarField cell_dy(const ScalarField& f) {
  const Grid& g = f.grid();
  ScalarField out(g);
  const double c = 0.5 / g.hy();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out(i, j) = (f.at_mirrored(i, j + 1) - f.at_mirrored(i, j - 1)) * c;
  return out;
}

ScalarField cell_dxx(const ScalarField& f) {
  const Grid& g = f.grid();
  ScalarField out(g);
  const double c = 1.0 / (g.hx() * g.hx());
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out(i, j) = (f.at_mirrored(i + 1, j) - 2.0 * f(i, j) + f.at_mirrored(i - 1, j)) * c;
  return out;
}

ScalarField cell_dyy(const ScalarField& f) {
  const Grid& g = f.grid();
  ScalarField out(g);
  const double c = 1.0 / (g.hy() * g.hy());
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out(i, j) = (f.at_mirrored(i, j + 1) - 2.0 * f(i, j) + f.at_mirrored(i, j - 1)) * c;
  return out;
}

ScalarField cell_dxy(const ScalarField& f) {
  const Grid& g = f.grid();
  ScalarField out(g);
  const double c = 0.25 / (g.hx() * g.hy());
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out(i, j) = (f.at_mirrored(i + 1, j + 1) - f.at_mirrored(i + 1, j - 1) -
                   f.at_mirrored(i - 1, j + 1) + f.at_mirrored(i - 1, j - 1)) * c;
  return out;
}

ScalarField hessian_log_frobenius_sq(const ScalarField& w) {
  if (min_value(w) <= 0.0)
    throw std::domain_error("hessian_log_frobenius_sq: field must be strictly positive");
  const Grid& g = w.grid();
  ScalarField lw(g);
  for (std::size_t k = 0; k < w.size(); ++k) lw[k] = std::log(w[k]);
  ScalarField gxx = cell_dxx(lw), gyy = cell_dyy(lw), gxy = cell_dxy(lw);
  ScalarField out(g);
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = gxx[k] * gxx[k] + 2.0 * gxy[k] * gxy[k] + gyy[k] * gyy[k];
  return out;
}

namespace {

// Smooth random positive field from a low-order cosine series. Every mode has
// a vanishing normal derivative on the boundary, so the whole field does.
ScalarField random_cosine_field(const Grid& g, std::uint64_t seed) {
  constexpr int kModes = 4;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  struct Mode { int k, l; double c; };
  std::vector<Mode> modes;
  double total = 0.0;
  for (int k = 0; k <= kModes; ++k) {
    for (int l = 0; l <= kModes; ++l) {
      if (k == 0 && l == 0) continue;
      double c = uni(rng) / (1.0 + k * k + l * l);
      modes.push_back({k, l, c});
      total += std::abs(c);
    }
  }
  const double scale = 0.9 / total;
  ScalarField out(g, 1.5);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      double s = 0.0;
      for (const Mode& m : modes)
        s += m.c * std::cos(m.k * kPi * g.x(i) / g.lx) * std::cos(m.l * kPi * g.y(j) / g.ly);
      out(i, j) += scale * s;
    }
  }
  return out;
}

}  // namespace

ScalarField manufactured(FieldKind kind, const Grid& g, std::uint64_t seed) {
  ScalarField out(g);
  switch (kind) {
    case FieldKind::kConst:
      for (double& v : out.values()) v = 1.0;
      return out;
    case FieldKind::kConstPlusCos:
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
          out(i, j) = 2.0 + std::cos(kPi * g.x(i) / g.lx) * std::cos(kPi * g.y(j) / g.ly);
      return out;
    case FieldKind::kGaussBump:
      // exp of a smooth well: peak 1 at the center, min e^{-2 beta} at the
      // corners, normal derivative identically zero on all edges.
      for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
          const double px = 0.5 * (1.0 + std::cos(2.0 * kPi * g.x(i) / g.lx));
          const double py = 0.5 * (1.0 + std::cos(2.0 * kPi * g.y(j) / g.ly));
          out(i, j) = std::exp(-kBumpBeta * (px + py));
        }
      }
      return out;
    case FieldKind::kRandomPositive:
      return random_cosine_field(g, seed);
  }
  throw std::invalid_argument("manufactured: bad kind");
}

ScalarField unit_shape(FieldKind kind, const Grid& g, std::uint64_t seed) {
  ScalarField f = manufactured(kind, g, seed);
  double lo = 0.0, span = 1.0;
  switch (kind) {
    case FieldKind::kConst:
      for (double& v : f.values()) v = 0.0;
      return f;
    case FieldKind::kConstPlusCos: lo = 1.0; span = 2.0; break;
    case FieldKind::kGaussBump: lo = std::exp(-2.0 * kBumpBeta); span = 1.0 - lo; break;
    case FieldKind::kRandomPositive: lo = 0.6; span = 1.8; break;
  }
  for (double& v : f.values()) v = (v - lo) / span;
  return f;
}

double min_value(const ScalarField& f) {
  double m = f[0];
  for (double v : f.values())
    if (v < m) m = v;
  return m;
}

double max_value(const ScalarField& f) {
  double m = f[0];
  for (double v : f.values())
    if (v > m) m = v;
  return m;
}

}  // namespace kslab
