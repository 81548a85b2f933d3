// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>

#include "coembed/kernels.hpp"
#include "coembed/metrics.hpp"

namespace coembed {

enum class EmbeddingMethod { moore, schoenberg, snowflake };

struct EmbeddingProvenance {
  EmbeddingMethod method = EmbeddingMethod::moore;
  std::size_t base_index = 0;  // schoenberg / snowflake constructions
  double p = 0.0;              // snowflake exponent
  double tolerance = 0.0;
};

// n image points in m-dimensional Euclidean space, m <= n. Coordinates are
// ordered by descending eigenvalue of the underlying factorization; any
// orthogonal transform is equally valid, so compare Gram or distance data,
// never raw coordinates.
struct Embedding {
  std::size_t n = 0;
  std::size_t m = 0;
  Matrix coords;  // n x m
  EmbeddingProvenance provenance;
};

double image_distance(const Embedding& e, std::size_t i, std::size_t j);

// Factor a positive definite kernel as pairwise inner products: eigenvalues
// in [-tol, 0] clamp to zero, columns at or below tol are dropped (numerical
// rank), coordinates are sqrt(lambda)-scaled eigenvector rows. An eigenvalue
// below -tol raises definiteness_error carrying the witness rather than
// silently projecting, which would corrupt the Gram round trip.
Embedding moore_factorize(const SymmetricKernel& k, double tol = kDefaultTolerance);

// Realize a normalized negative definite kernel as pairwise squared Euclidean
// distances. Gram at the base point: K(i,j) = (N(i,b) + N(j,b) - N(i,j)) / 2
// over i,j != b, factored by moore_factorize, base mapped to the origin.
// Realized distances are independent of the base choice.
Embedding schoenberg_embed(const SymmetricKernel& n, std::size_t base = 0,
                           double tol = kDefaultTolerance);

struct IsometricTestResult {
  bool embeddable = false;
  DefinitenessReport report;
  std::optional<Embedding> embedding;
};

// A metric embeds isometrically into Euclidean space iff d^2 is negative
// definite; on pass the returned embedding realizes d exactly (within
// 1e-8 * scale).
IsometricTestResult isometric_hilbert_test(const FiniteMetric& m,
                                           double tol = kDefaultTolerance);

// N(i,j) = sum_k |x_ik - x_jk|^p, 0 < p <= 2: the negative definite kernel
// realized by the snowflake embedding.
SymmetricKernel snowflake_kernel(const PointCloud& p, double p_exponent);

// Embed an l_p cloud so that image distances equal N(i,j)^{1/2}, i.e. the
// (l_p distance)^{p/2} for p >= 1 and (metric)^{1/2} for p < 1. p = 2 yields
// an isometry of the cloud.
Embedding snowflake_embed(const PointCloud& p, double p_exponent,
                          double tol = kDefaultTolerance);

}  // namespace coembed
