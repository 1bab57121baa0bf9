#pragma once

#include <stdexcept>
#include <string>

namespace llg {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid arguments, invalid config, grid mismatches.
struct usage_error : error {
  using error::error;
};

// Operation issued against an object in the wrong state (cold history
// buffer, broken invariant detected upstream).
struct state_error : error {
  using error::error;
};

// Iterative solve failed to converge.
struct solver_error : error {
  solver_error(const std::string& msg, int iters, double residual)
      : error(msg), iterations(iters), final_residual(residual) {}
  int iterations;
  double final_residual;
};

// |m_hat| fell below the projection threshold at some grid point.
struct projection_error : state_error {
  projection_error(const std::string& msg, int ix_, int iy_, double mag_)
      : state_error(msg), ix(ix_), iy(iy_), magnitude(mag_) {}
  int ix;
  int iy;
  double magnitude;
};

struct io_error : error {
  using error::error;
};

}  // namespace llg
