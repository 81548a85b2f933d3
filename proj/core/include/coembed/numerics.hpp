// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "coembed/matrix.hpp"

namespace coembed {

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // orthonormal; column k pairs with eigenvalues[k]
};

// Symmetric eigendecomposition by cyclic Jacobi sweeps with a fixed row-major
// pivot order. Sweeps stop once the off-diagonal Frobenius norm drops below
// 1e-12 * ||M||_F, capped at 100 sweeps. Bit-deterministic for identical
// input on a single platform.
//
// Requires M square, entries finite, symmetric within 1e-12 relative to
// max(1, max|entry|); violations raise input_error.
//
// Guarantees (tested): V diag(lambda) V^T reproduces M within
// 1e-10 * ||M||_F, and ||V^T V - I||_max <= 1e-10.
SpectralDecomposition eigh_symmetric(const Matrix& m);

// P = I - (1/n) * ones. Symmetric, idempotent, annihilates the all-ones
// vector; projects coefficient vectors onto the mean-zero subspace.
Matrix centering_projector(std::size_t n);

// Trapezoid rule on a log-spaced grid over [lower, upper], 0 < lower < upper,
// nodes >= 2. The grid is log-spaced because the integrands handled here have
// a power singularity at 0 and exponential decay at infinity. A non-finite
// integrand sample raises numerical_error naming the offending node.
double log_quadrature(const std::function<double(double)>& integrand,
                      double lower, double upper, std::size_t nodes);

}  // namespace coembed
