// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coembed/kernels.hpp"
#include "coembed/matrix.hpp"

namespace coembed {

// n points with real coordinates in dimension dim; a finite sample of an
// l_p space under the metrics below.
struct PointCloud {
  std::size_t n = 0;
  std::size_t dim = 0;
  Matrix coords;  // n x dim
};

PointCloud make_point_cloud(Matrix coords);

struct MetricAxiomFlags {
  bool symmetry = false;
  bool zero_diagonal = false;
  bool non_negativity = false;
  bool triangle = false;
};

// Finite metric space as an n x n distance array. Symmetry, zero diagonal and
// non-negativity are hard invariants of the constructors; quasi-metric inputs
// are permitted with the triangle flag unset.
struct FiniteMetric {
  std::size_t n = 0;
  Matrix d;
  MetricAxiomFlags axioms_checked;
};

// Validates symmetry/diagonal/non-negativity (input_error on failure) and
// records the triangle verdict in the flags.
FiniteMetric make_finite_metric(Matrix d, double tol = kDefaultTolerance);

struct TriangleWitness {
  std::size_t i = 0, j = 0, k = 0;
  double slack = 0.0;  // d(i,k) - d(i,j) - d(j,k), positive on violation
};

struct MetricAxiomReport {
  MetricAxiomFlags pass;
  std::optional<std::pair<std::size_t, std::size_t>> symmetry_witness;
  std::optional<std::size_t> diagonal_witness;
  std::optional<std::pair<std::size_t, std::size_t>> negativity_witness;
  std::optional<TriangleWitness> triangle_witness;

  bool all_pass() const {
    return pass.symmetry && pass.zero_diagonal && pass.non_negativity &&
           pass.triangle;
  }
};

// l_p distances for 0 < p <= 2. For p >= 1 this is (sum |dx|^p)^{1/p}; for
// 0 < p < 1 it is sum |dx|^p, the standard metric in that regime (no root),
// so the triangle inequality holds in both regimes.
FiniteMetric lp_distance_matrix(const PointCloud& p, double p_exponent);

// Shortest-path metric of a connected unit-weight graph. A disconnected
// graph raises input_error naming a stranded vertex.
FiniteMetric graph_shortest_path_metric(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// Exhaustive axiom check (all triples) with a witness for each failure.
MetricAxiomReport validate_metric(const FiniteMetric& m,
                                  double tol = kDefaultTolerance);

enum class CloudDistribution { uniform_box, gaussian };

// Deterministic, platform-stable sampling: mt19937_64 seeded with `seed`,
// uniform doubles in [0,1) from the top 53 bits, gaussians via Box-Muller.
PointCloud random_point_cloud(std::size_t n, std::size_t dim, std::uint64_t seed,
                              CloudDistribution dist = CloudDistribution::uniform_box);

// Entries d(i,j)^beta, beta > 0; the snowflake composition of a metric with
// the power function.
SymmetricKernel metric_power_kernel(const FiniteMetric& m, double beta);

}  // namespace coembed
