#pragma once

#include <array>

#include "llg/field.hpp"

namespace llg {

// ---- differential operators (spectral symbols) ----

ScalarField partial_derivative(const ScalarField& f, int axis);
ScalarField laplacian(const ScalarField& f);
VectorField3 laplacian(const VectorField3& f);

// All first partials of every component: grads[i][j] = d m_i / d x_j.
std::array<std::array<ScalarField, 2>, 3> jacobian(const VectorField3& m);

// |grad m|^2 = sum_{i,j} (d_j m_i)^2, evaluated pointwise.
ScalarField gradient_norm_sq(const VectorField3& m);

// ---- pointwise algebra ----

VectorField3 cross(const VectorField3& a, const VectorField3& b);
ScalarField dot(const VectorField3& a, const VectorField3& b);

// c0*f0 + c1*f1 + ... over matching grids.
VectorField3 linear_combination(std::span<const VectorField3* const> fields,
                                std::span<const double> weights);
void axpy(double alpha, const VectorField3& x, VectorField3& y);
void scale(VectorField3& f, double alpha);

// ---- quadrature, norms, diagnostics ----

double inner_l2(const ScalarField& f, const ScalarField& g);
double inner_l2(const VectorField3& f, const VectorField3& g);
double norm_l2(const ScalarField& f);
double norm_l2(const VectorField3& f);
double norm_h1(const ScalarField& f);
double norm_h1(const VectorField3& f);
double norm_h2(const ScalarField& f);
double norm_h2(const VectorField3& f);

// Squared Sobolev pieces from the spectral coefficients (Parseval route);
// returns {||f||^2, ||grad f||^2, sum_{i,j} ||d_i d_j f||^2}.
std::array<double, 3> sobolev_sq_spectral(const ScalarField& f);
std::array<double, 3> sobolev_sq_spectral(const VectorField3& f);

// max over grid points of sqrt(sum_{i,j} (d_j m_i)^2).
double sup_grad_norm(const VectorField3& m);

double min_pointwise_norm(const VectorField3& m);
double max_pointwise_norm(const VectorField3& m);
// max over grid of | |m| - 1 |.
double max_unit_deviation(const VectorField3& m);

bool all_finite(const VectorField3& m);

// 2/3-rule spectral filter: zero every mode with |freq| > N/3 on either axis.
void dealias_23(ScalarField& f);
void dealias_23(VectorField3& f);

}  // namespace llg
