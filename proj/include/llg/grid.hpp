#pragma once

#include <cmath>
#include <numbers>

#include "llg/errors.hpp"

namespace llg {

// Uniform periodic grid on [ox, ox+lx) x [oy, oy+ly).  One-dimensional
// grids are stored with ny = 1, ly = 1 so that cell area hx()*hy()
// reduces to the 1D spacing and all loops stay dimension-agnostic.
struct GridSpec {
  int dims = 2;
  int nx = 0, ny = 1;
  double lx = 0.0, ly = 1.0;
  double ox = 0.0, oy = 0.0;

  double hx() const { return lx / nx; }
  double hy() const { return ly / ny; }
  double cell_area() const { return hx() * hy(); }
  int npoints() const { return nx * ny; }
  // r2c spectral layout: ny rows of (nx/2 + 1) columns.
  int nxh() const { return nx / 2 + 1; }
  int nspec() const { return ny * nxh(); }

  double x(int ix) const { return ox + ix * hx(); }
  double y(int iy) const { return oy + iy * hy(); }
  int index(int ix, int iy) const { return iy * nx + ix; }

  bool same_as(const GridSpec& o) const {
    return dims == o.dims && nx == o.nx && ny == o.ny && lx == o.lx &&
           ly == o.ly && ox == o.ox && oy == o.oy;
  }

  void validate() const {
    if (dims != 1 && dims != 2)
      throw usage_error("GridSpec: dims must be 1 or 2");
    if (nx < 4 || nx % 2 != 0)
      throw usage_error("GridSpec: nx must be even and >= 4");
    if (dims == 2 && (ny < 4 || ny % 2 != 0))
      throw usage_error("GridSpec: ny must be even and >= 4");
    if (dims == 1 && ny != 1)
      throw usage_error("GridSpec: 1D grids must have ny == 1");
    if (!(lx > 0.0) || !(ly > 0.0))
      throw usage_error("GridSpec: domain lengths must be positive");
    if (!(hx() > 0.0) || !(hy() > 0.0))
      throw usage_error("GridSpec: grid spacings must be positive");
  }
};

inline GridSpec make_grid_1d(int nx, double lx, double ox = 0.0) {
  GridSpec g;
  g.dims = 1;
  g.nx = nx;
  g.ny = 1;
  g.lx = lx;
  g.ly = 1.0;
  g.ox = ox;
  g.oy = 0.0;
  g.validate();
  return g;
}

inline GridSpec make_grid_2d(int nx, int ny, double lx, double ly,
                             double ox = 0.0, double oy = 0.0) {
  GridSpec g;
  g.dims = 2;
  g.nx = nx;
  g.ny = ny;
  g.lx = lx;
  g.ly = ly;
  g.ox = ox;
  g.oy = oy;
  g.validate();
  return g;
}

// Wavenumber bookkeeping for the r2c layout.  Integer frequencies follow
// the usual FFT convention; the unmatched Nyquist mode gets a zero
// first-derivative symbol (keeps odd-order derivatives of real fields
// real) while |k|^2 keeps its full magnitude.
struct Wavenumbers {
  explicit Wavenumbers(const GridSpec& g) : grid(g) {}
  const GridSpec& grid;

  // ix in [0, nx/2]; always non-negative in the half-spectrum.
  double kx(int ix) const {
    return 2.0 * std::numbers::pi * ix / grid.lx;
  }
  int freq_y(int iy) const {
    return (iy <= grid.ny / 2) ? iy : iy - grid.ny;
  }
  double ky(int iy) const {
    return 2.0 * std::numbers::pi * freq_y(iy) / grid.ly;
  }
  double kx_deriv(int ix) const {
    return (ix == grid.nx / 2) ? 0.0 : kx(ix);
  }
  double ky_deriv(int iy) const {
    return (grid.ny > 1 && iy == grid.ny / 2) ? 0.0 : ky(iy);
  }
  double k_sq(int ix, int iy) const {
    const double a = kx(ix);
    const double b = ky(iy);
    return a * a + b * b;
  }
  // Multiplicity of a half-spectrum entry when summing over the full
  // spectrum (conjugate pairs counted once in storage).
  double hermitian_weight(int ix) const {
    return (ix == 0 || ix == grid.nx / 2) ? 1.0 : 2.0;
  }
};

}  // namespace llg
