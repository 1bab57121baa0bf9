#include "llg/ops.hpp"

#include <cmath>

namespace llg {

namespace {

// Apply a real spectral symbol s(ix, iy) to f's coefficients.
template <class Symbol>
ScalarField apply_real_symbol(const ScalarField& f, Symbol&& s) {
  const GridSpec& g = f.grid();
  const Wavenumbers wn(g);
  ScalarField out(f.workspace());
  std::span<const cplx> in = f.coeffs();
  std::span<cplx> oc = out.mutable_coeffs();
  const int nxh = g.nxh();
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < nxh; ++ix) {
      const int idx = iy * nxh + ix;
      oc[idx] = s(wn, ix, iy) * in[idx];
    }
  return out;
}

}  // namespace

ScalarField partial_derivative(const ScalarField& f, int axis) {
  const GridSpec& g = f.grid();
  if (axis < 0 || axis >= g.dims)
    throw usage_error("partial_derivative: axis out of range for grid dims");
  const Wavenumbers wn(g);
  ScalarField out(f.workspace());
  std::span<const cplx> in = f.coeffs();
  std::span<cplx> oc = out.mutable_coeffs();
  const int nxh = g.nxh();
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < nxh; ++ix) {
      const int idx = iy * nxh + ix;
      const double k = (axis == 0) ? wn.kx_deriv(ix) : wn.ky_deriv(iy);
      oc[idx] = cplx(0.0, k) * in[idx];
    }
  return out;
}

ScalarField laplacian(const ScalarField& f) {
  return apply_real_symbol(f, [](const Wavenumbers& wn, int ix, int iy) {
    return -wn.k_sq(ix, iy);
  });
}

VectorField3 laplacian(const VectorField3& f) {
  VectorField3 out(f.workspace());
  for (int i = 0; i < 3; ++i) out.comp(i) = laplacian(f.comp(i));
  return out;
}

std::array<std::array<ScalarField, 2>, 3> jacobian(const VectorField3& m) {
  const GridSpec& g = m.grid();
  std::array<std::array<ScalarField, 2>, 3> grads = {
      {{ScalarField(m.workspace()), ScalarField(m.workspace())},
       {ScalarField(m.workspace()), ScalarField(m.workspace())},
       {ScalarField(m.workspace()), ScalarField(m.workspace())}}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < g.dims; ++j)
      grads[i][j] = partial_derivative(m.comp(i), j);
  return grads;
}

ScalarField gradient_norm_sq(const VectorField3& m) {
  const GridSpec& g = m.grid();
  auto grads = jacobian(m);
  ScalarField out(m.workspace());
  std::span<double> ov = out.mutable_values();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < g.dims; ++j) {
      std::span<const double> d = grads[i][j].values();
      for (int p = 0; p < g.npoints(); ++p) ov[p] += d[p] * d[p];
    }
  return out;
}

VectorField3 cross(const VectorField3& a, const VectorField3& b) {
  require_same_grid(a.grid(), b.grid(), "cross");
  const int n = a.grid().npoints();
  VectorField3 out(a.workspace());
  std::span<const double> a1 = a.comp(0).values(), a2 = a.comp(1).values(),
                          a3 = a.comp(2).values();
  std::span<const double> b1 = b.comp(0).values(), b2 = b.comp(1).values(),
                          b3 = b.comp(2).values();
  std::span<double> c1 = out.comp(0).mutable_values();
  std::span<double> c2 = out.comp(1).mutable_values();
  std::span<double> c3 = out.comp(2).mutable_values();
  for (int p = 0; p < n; ++p) {
    c1[p] = a2[p] * b3[p] - a3[p] * b2[p];
    c2[p] = a3[p] * b1[p] - a1[p] * b3[p];
    c3[p] = a1[p] * b2[p] - a2[p] * b1[p];
  }
  return out;
}

ScalarField dot(const VectorField3& a, const VectorField3& b) {
  require_same_grid(a.grid(), b.grid(), "dot");
  const int n = a.grid().npoints();
  ScalarField out(a.workspace());
  std::span<double> ov = out.mutable_values();
  for (int i = 0; i < 3; ++i) {
    std::span<const double> av = a.comp(i).values();
    std::span<const double> bv = b.comp(i).values();
    for (int p = 0; p < n; ++p) ov[p] += av[p] * bv[p];
  }
  return out;
}

VectorField3 linear_combination(std::span<const VectorField3 const*> fields,
                                std::span<const double> weights) {
  if (fields.empty() || fields.size() != weights.size())
    throw usage_error("linear_combination: mismatched field/weight counts");
  VectorField3 out(fields[0]->workspace());
  for (size_t f = 0; f < fields.size(); ++f) {
    require_same_grid(out.grid(), fields[f]->grid(), "linear_combination");
    axpy(weights[f], *fields[f], out);
  }
  return out;
}

void axpy(double alpha, const VectorField3& x, VectorField3& y) {
  require_same_grid(x.grid(), y.grid(), "axpy");
  const int n = x.grid().npoints();
  for (int i = 0; i < 3; ++i) {
    std::span<const double> xv = x.comp(i).values();
    std::span<double> yv = y.comp(i).mutable_values();
    for (int p = 0; p < n; ++p) yv[p] += alpha * xv[p];
  }
}

void scale(VectorField3& f, double alpha) {
  const int n = f.grid().npoints();
  for (int i = 0; i < 3; ++i) {
    std::span<double> v = f.comp(i).mutable_values();
    for (int p = 0; p < n; ++p) v[p] *= alpha;
  }
}

double inner_l2(const ScalarField& f, const ScalarField& g) {
  require_same_grid(f.grid(), g.grid(), "inner_l2");
  std::span<const double> fv = f.values();
  std::span<const double> gv = g.values();
  double sum = 0.0;
  const int n = f.grid().npoints();
  for (int p = 0; p < n; ++p) sum += fv[p] * gv[p];
  return sum * f.grid().cell_area();
}

double inner_l2(const VectorField3& f, const VectorField3& g) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) sum += inner_l2(f.comp(i), g.comp(i));
  return sum;
}

double norm_l2(const ScalarField& f) { return std::sqrt(inner_l2(f, f)); }

double norm_l2(const VectorField3& f) { return std::sqrt(inner_l2(f, f)); }

double norm_h1(const ScalarField& f) {
  double sq = inner_l2(f, f);
  for (int j = 0; j < f.grid().dims; ++j) {
    ScalarField d = partial_derivative(f, j);
    sq += inner_l2(d, d);
  }
  return std::sqrt(sq);
}

double norm_h1(const VectorField3& f) {
  double sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double c = norm_h1(f.comp(i));
    sq += c * c;
  }
  return std::sqrt(sq);
}

namespace {

// Second partial d_i d_j via the full -k_i k_j symbol (Nyquist kept, as
// for the Laplacian).
ScalarField second_derivative(const ScalarField& f, int ax1, int ax2) {
  return apply_real_symbol(f, [ax1, ax2](const Wavenumbers& wn, int ix,
                                         int iy) {
    const double ka = (ax1 == 0) ? wn.kx(ix) : wn.ky(iy);
    const double kb = (ax2 == 0) ? wn.kx(ix) : wn.ky(iy);
    return -ka * kb;
  });
}

}  // namespace

double norm_h2(const ScalarField& f) {
  const double h1 = norm_h1(f);
  double sq = h1 * h1;
  for (int i = 0; i < f.grid().dims; ++i)
    for (int j = 0; j < f.grid().dims; ++j) {
      ScalarField d = second_derivative(f, i, j);
      sq += inner_l2(d, d);
    }
  return std::sqrt(sq);
}

double norm_h2(const VectorField3& f) {
  double sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double c = norm_h2(f.comp(i));
    sq += c * c;
  }
  return std::sqrt(sq);
}

std::array<double, 3> sobolev_sq_spectral(const ScalarField& f) {
  const GridSpec& g = f.grid();
  const Wavenumbers wn(g);
  std::span<const cplx> c = f.coeffs();
  // Parseval: h*sum_x |f|^2 = (lx*ly/N^2) * sum_k |F_k|^2.
  const double scale =
      g.lx * g.ly / (static_cast<double>(g.npoints()) * g.npoints());
  double l2 = 0.0, grad = 0.0, hess = 0.0;
  const int nxh = g.nxh();
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < nxh; ++ix) {
      const double w = wn.hermitian_weight(ix);
      const double mag = std::norm(c[iy * nxh + ix]) * w;
      const double kx2 = wn.kx(ix) * wn.kx(ix);
      const double ky2 = wn.ky(iy) * wn.ky(iy);
      const double ksq = kx2 + ky2;
      l2 += mag;
      grad += ksq * mag;
      // sum over ordered pairs (i,j): (kx^2 + ky^2)^2
      hess += ksq * ksq * mag;
    }
  return {l2 * scale, grad * scale, hess * scale};
}

std::array<double, 3> sobolev_sq_spectral(const VectorField3& f) {
  std::array<double, 3> acc = {0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i) {
    const auto c = sobolev_sq_spectral(f.comp(i));
    for (int j = 0; j < 3; ++j) acc[j] += c[j];
  }
  return acc;
}

double sup_grad_norm(const VectorField3& m) {
  const GridSpec& g = m.grid();
  auto grads = jacobian(m);
  double best = 0.0;
  for (int p = 0; p < g.npoints(); ++p) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < g.dims; ++j) {
        const double d = grads[i][j].values()[p];
        s += d * d;
      }
    best = std::max(best, s);
  }
  return std::sqrt(best);
}

namespace {

template <class Fold>
double fold_pointwise_norm(const VectorField3& m, double init, Fold&& fold) {
  const int n = m.grid().npoints();
  std::span<const double> v1 = m.comp(0).values();
  std::span<const double> v2 = m.comp(1).values();
  std::span<const double> v3 = m.comp(2).values();
  double acc = init;
  for (int p = 0; p < n; ++p) {
    const double mag =
        std::sqrt(v1[p] * v1[p] + v2[p] * v2[p] + v3[p] * v3[p]);
    acc = fold(acc, mag);
  }
  return acc;
}

}  // namespace

double min_pointwise_norm(const VectorField3& m) {
  return fold_pointwise_norm(
      m, std::numeric_limits<double>::infinity(),
      [](double a, double b) { return std::min(a, b); });
}

double max_pointwise_norm(const VectorField3& m) {
  return fold_pointwise_norm(m, 0.0,
                             [](double a, double b) { return std::max(a, b); });
}

double max_unit_deviation(const VectorField3& m) {
  return fold_pointwise_norm(m, 0.0, [](double a, double b) {
    return std::max(a, std::abs(b - 1.0));
  });
}

bool all_finite(const VectorField3& m) {
  const int n = m.grid().npoints();
  for (int i = 0; i < 3; ++i) {
    std::span<const double> v = m.comp(i).values();
    for (int p = 0; p < n; ++p)
      if (!std::isfinite(v[p])) return false;
  }
  return true;
}

void dealias_23(ScalarField& f) {
  const GridSpec& g = f.grid();
  const Wavenumbers wn(g);
  std::span<cplx> c = f.mutable_coeffs();
  const int cut_x = g.nx / 3;
  const int cut_y = g.ny / 3;
  const int nxh = g.nxh();
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < nxh; ++ix) {
      const bool kill = ix > cut_x ||
                        (g.ny > 1 && std::abs(wn.freq_y(iy)) > cut_y);
      if (kill) c[iy * nxh + ix] = cplx(0.0, 0.0);
    }
}

void dealias_23(VectorField3& f) {
  for (int i = 0; i < 3; ++i) dealias_23(f.comp(i));
}

}  // namespace llg
