#include "llg/field.hpp"

#include <fftw3.h>

#include <mutex>

namespace llg {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct SpectralWorkspace::Plans {
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;
};

SpectralWorkspace::SpectralWorkspace(const GridSpec& grid)
    : grid_(grid), plans_(std::make_unique<Plans>()) {
  grid_.validate();
  std::vector<double> phys(static_cast<size_t>(grid_.npoints()));
  scratch_.resize(static_cast<size_t>(grid_.nspec()));
  std::lock_guard<std::mutex> lock(planner_mutex());
  // FFTW_UNALIGNED lets the plans run on any caller-provided arrays;
  // FFTW_ESTIMATE keeps plan choice deterministic run to run.
  plans_->fwd = fftw_plan_dft_r2c_2d(
      grid_.ny, grid_.nx, phys.data(),
      reinterpret_cast<fftw_complex*>(scratch_.data()),
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans_->inv = fftw_plan_dft_c2r_2d(
      grid_.ny, grid_.nx, reinterpret_cast<fftw_complex*>(scratch_.data()),
      phys.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plans_->fwd || !plans_->inv)
    throw error("SpectralWorkspace: FFT plan creation failed");
}

SpectralWorkspace::~SpectralWorkspace() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (plans_->fwd) fftw_destroy_plan(plans_->fwd);
  if (plans_->inv) fftw_destroy_plan(plans_->inv);
}

std::shared_ptr<SpectralWorkspace> SpectralWorkspace::create(
    const GridSpec& grid) {
  return std::shared_ptr<SpectralWorkspace>(new SpectralWorkspace(grid));
}

void SpectralWorkspace::forward(const double* phys, cplx* spec) {
  fftw_execute_dft_r2c(plans_->fwd, const_cast<double*>(phys),
                       reinterpret_cast<fftw_complex*>(spec));
}

void SpectralWorkspace::inverse(const cplx* spec, double* phys) {
  // c2r destroys its input; transform a scratch copy.
  scratch_.assign(spec, spec + grid_.nspec());
  fftw_execute_dft_c2r(plans_->inv,
                       reinterpret_cast<fftw_complex*>(scratch_.data()), phys);
  const double scale = 1.0 / grid_.npoints();
  const int n = grid_.npoints();
  for (int i = 0; i < n; ++i) phys[i] *= scale;
}

ScalarField::ScalarField(WorkspacePtr ws)
    : ws_(std::move(ws)),
      phys_(static_cast<size_t>(ws_->grid().npoints()), 0.0) {}

void ScalarField::ensure_physical() const {
  if (phys_valid_) return;
  phys_.resize(static_cast<size_t>(grid().npoints()));
  ws_->inverse(spec_.data(), phys_.data());
  phys_valid_ = true;
}

void ScalarField::ensure_spectral() const {
  if (spec_valid_) return;
  spec_.resize(static_cast<size_t>(grid().nspec()));
  ws_->forward(phys_.data(), spec_.data());
  spec_valid_ = true;
}

std::span<const double> ScalarField::values() const {
  ensure_physical();
  return {phys_.data(), phys_.size()};
}

std::span<double> ScalarField::mutable_values() {
  ensure_physical();
  spec_valid_ = false;
  return {phys_.data(), phys_.size()};
}

std::span<const cplx> ScalarField::coeffs() const {
  ensure_spectral();
  return {spec_.data(), spec_.size()};
}

std::span<cplx> ScalarField::mutable_coeffs() {
  ensure_spectral();
  phys_valid_ = false;
  return {spec_.data(), spec_.size()};
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* op) {
  if (!a.same_as(b))
    throw usage_error(std::string(op) + ": fields live on different grids");
}

}  // namespace llg
