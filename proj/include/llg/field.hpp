#pragma once

#include <array>
#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "llg/grid.hpp"

namespace llg {

using cplx = std::complex<double>;

// Owns the FFT plans and transform scratch for one grid.  A workspace is
// shared (via shared_ptr) by all fields of one simulation; it must not be
// used from several threads at once.  Distinct workspaces are independent.
class SpectralWorkspace {
 public:
  static std::shared_ptr<SpectralWorkspace> create(const GridSpec& grid);
  ~SpectralWorkspace();

  SpectralWorkspace(const SpectralWorkspace&) = delete;
  SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

  const GridSpec& grid() const { return grid_; }

  // Unnormalized forward r2c transform.
  void forward(const double* phys, cplx* spec);
  // Inverse c2r transform, normalized by 1/(nx*ny); preserves `spec`.
  void inverse(const cplx* spec, double* phys);

 private:
  explicit SpectralWorkspace(const GridSpec& grid);
  GridSpec grid_;
  struct Plans;
  std::unique_ptr<Plans> plans_;
  std::vector<cplx> scratch_;
};

using WorkspacePtr = std::shared_ptr<SpectralWorkspace>;

// Real scalar field on a periodic grid with an on-demand spectral
// representation.  Whichever side was written last is authoritative; the
// other is recomputed lazily.
class ScalarField {
 public:
  explicit ScalarField(WorkspacePtr ws);

  const GridSpec& grid() const { return ws_->grid(); }
  const WorkspacePtr& workspace() const { return ws_; }

  std::span<const double> values() const;
  std::span<double> mutable_values();
  std::span<const cplx> coeffs() const;
  std::span<cplx> mutable_coeffs();

  bool has_spectral() const { return spec_valid_; }
  bool has_physical() const { return phys_valid_; }

 private:
  void ensure_physical() const;
  void ensure_spectral() const;

  WorkspacePtr ws_;
  mutable std::vector<double> phys_;
  mutable std::vector<cplx> spec_;
  mutable bool phys_valid_ = true;
  mutable bool spec_valid_ = false;
};

// Three-component vector field; all components share one grid/workspace.
class VectorField3 {
 public:
  explicit VectorField3(WorkspacePtr ws)
      : comps_{ScalarField(ws), ScalarField(ws), ScalarField(ws)} {}

  const GridSpec& grid() const { return comps_[0].grid(); }
  const WorkspacePtr& workspace() const { return comps_[0].workspace(); }

  ScalarField& comp(int i) { return comps_[i]; }
  const ScalarField& comp(int i) const { return comps_[i]; }

  // Fill from a pointwise callable f(x, y) -> {m1, m2, m3}.
  template <class F>
  void fill(F&& f) {
    const GridSpec& g = grid();
    std::array<std::span<double>, 3> v = {comps_[0].mutable_values(),
                                          comps_[1].mutable_values(),
                                          comps_[2].mutable_values()};
    for (int iy = 0; iy < g.ny; ++iy) {
      const double y = g.y(iy);
      for (int ix = 0; ix < g.nx; ++ix) {
        const std::array<double, 3> m = f(g.x(ix), y);
        const int idx = g.index(ix, iy);
        v[0][idx] = m[0];
        v[1][idx] = m[1];
        v[2][idx] = m[2];
      }
    }
  }

 private:
  std::array<ScalarField, 3> comps_;
};

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* op);

}  // namespace llg
