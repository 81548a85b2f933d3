// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#include "coembed/metrics.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <random>
#include <string>

namespace coembed {

PointCloud make_point_cloud(Matrix coords) {
  if (coords.rows() == 0 || coords.cols() == 0)
    throw input_error("point cloud must have n >= 1 and dim >= 1");
  if (!all_finite(coords))
    throw input_error("point cloud coordinates must be finite");
  PointCloud p;
  p.n = coords.rows();
  p.dim = coords.cols();
  p.coords = std::move(coords);
  return p;
}

namespace {

double resolve_metric_tol(const Matrix& d, double tol) {
  return tol < 0.0 ? 1e-9 * tolerance_scale(d) : tol;
}

}  // namespace

MetricAxiomReport validate_metric(const FiniteMetric& m, double tol) {
  const std::size_t n = m.n;
  const double eps = resolve_metric_tol(m.d, tol);
  MetricAxiomReport r;
  r.pass = {true, true, true, true};

  for (std::size_t i = 0; i < n && r.pass.zero_diagonal; ++i)
    if (std::abs(m.d(i, i)) > eps) {
      r.pass.zero_diagonal = false;
      r.diagonal_witness = i;
    }
  for (std::size_t i = 0; i < n && r.pass.symmetry; ++i)
    for (std::size_t j = i + 1; j < n && r.pass.symmetry; ++j)
      if (std::abs(m.d(i, j) - m.d(j, i)) > eps) {
        r.pass.symmetry = false;
        r.symmetry_witness = {i, j};
      }
  for (std::size_t i = 0; i < n && r.pass.non_negativity; ++i)
    for (std::size_t j = 0; j < n && r.pass.non_negativity; ++j)
      if (m.d(i, j) < -eps) {
        r.pass.non_negativity = false;
        r.negativity_witness = {i, j};
      }
  for (std::size_t i = 0; i < n && r.pass.triangle; ++i)
    for (std::size_t j = 0; j < n && r.pass.triangle; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double slack = m.d(i, k) - m.d(i, j) - m.d(j, k);
        if (slack > eps) {
          r.pass.triangle = false;
          r.triangle_witness = TriangleWitness{i, j, k, slack};
          break;
        }
      }
    }
  return r;
}

FiniteMetric make_finite_metric(Matrix d, double tol) {
  if (d.rows() == 0 || d.rows() != d.cols())
    throw input_error("metric must be a non-empty square matrix");
  if (!all_finite(d)) throw input_error("metric entries must be finite");

  FiniteMetric m;
  m.n = d.rows();
  m.d = std::move(d);
  MetricAxiomReport r = validate_metric(m, tol);
  if (!r.pass.symmetry)
    throw input_error("metric not symmetric at (" +
                      std::to_string(r.symmetry_witness->first) + ", " +
                      std::to_string(r.symmetry_witness->second) + ")");
  if (!r.pass.zero_diagonal)
    throw input_error("metric has nonzero diagonal at index " +
                      std::to_string(*r.diagonal_witness));
  if (!r.pass.non_negativity)
    throw input_error("metric has a negative entry at (" +
                      std::to_string(r.negativity_witness->first) + ", " +
                      std::to_string(r.negativity_witness->second) + ")");
  m.axioms_checked = r.pass;
  return m;
}

FiniteMetric lp_distance_matrix(const PointCloud& p, double p_exponent) {
  if (!(p_exponent > 0.0) || p_exponent > 2.0)
    throw input_error("lp_distance_matrix: p must lie in (0, 2]");
  const std::size_t n = p.n;
  Matrix d(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < p.dim; ++k) {
        const double diff = std::abs(p.coords(i, k) - p.coords(j, k));
        if (p_exponent == 2.0)
          sum += diff * diff;
        else if (p_exponent == 1.0)
          sum += diff;
        else
          sum += std::pow(diff, p_exponent);
      }
      double dist;
      if (p_exponent >= 1.0)
        dist = p_exponent == 2.0   ? std::sqrt(sum)
               : p_exponent == 1.0 ? sum
                                   : std::pow(sum, 1.0 / p_exponent);
      else
        dist = sum;  // sum |dx|^p is the metric for p < 1
      d(i, j) = d(j, i) = dist;
    }
  FiniteMetric m;
  m.n = n;
  m.d = std::move(d);
  m.axioms_checked = {true, true, true, true};
  return m;
}

FiniteMetric graph_shortest_path_metric(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (n == 0) throw input_error("graph_shortest_path_metric: n must be positive");
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n)
      throw input_error("graph_shortest_path_metric: edge endpoint out of range");
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  Matrix d(n, n);
  std::vector<std::ptrdiff_t> dist(n);
  for (std::size_t src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    std::queue<std::size_t> queue;
    queue.push(src);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push(w);
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (dist[j] < 0)
        throw input_error("graph_shortest_path_metric: graph disconnected, vertex " +
                          std::to_string(j) + " unreachable from vertex " +
                          std::to_string(src));
      d(src, j) = static_cast<double>(dist[j]);
    }
  }
  FiniteMetric m;
  m.n = n;
  m.d = std::move(d);
  m.axioms_checked = {true, true, true, true};
  return m;
}

namespace {

// Top 53 bits of the mt19937_64 stream; uniform in [0, 1).
double next_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

PointCloud random_point_cloud(std::size_t n, std::size_t dim, std::uint64_t seed,
                              CloudDistribution dist) {
  if (n == 0 || dim == 0)
    throw input_error("random_point_cloud: n and dim must be positive");
  std::mt19937_64 gen(seed);
  Matrix coords(n, dim);
  if (dist == CloudDistribution::uniform_box) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < dim; ++k) coords(i, k) = next_uniform(gen);
  } else {
    // Box-Muller on the same uniform stream; pairs consumed in order.
    bool have_spare = false;
    double spare = 0.0;
    auto next_gaussian = [&]() {
      if (have_spare) {
        have_spare = false;
        return spare;
      }
      double u1 = next_uniform(gen);
      if (u1 <= 0.0) u1 = 0x1.0p-53;
      const double u2 = next_uniform(gen);
      const double radius = std::sqrt(-2.0 * std::log(u1));
      const double angle = 2.0 * std::numbers::pi * u2;
      spare = radius * std::sin(angle);
      have_spare = true;
      return radius * std::cos(angle);
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < dim; ++k) coords(i, k) = next_gaussian();
  }
  PointCloud p;
  p.n = n;
  p.dim = dim;
  p.coords = std::move(coords);
  return p;
}

SymmetricKernel metric_power_kernel(const FiniteMetric& m, double beta) {
  if (!(beta > 0.0)) throw input_error("metric_power_kernel: beta must be positive");
  Matrix out(m.n, m.n);
  for (std::size_t i = 0; i + 1 < m.n; ++i)
    for (std::size_t j = i + 1; j < m.n; ++j) {
      const double d = m.d(i, j);
      double value;
      if (beta == 1.0)
        value = d;
      else if (beta == 2.0)
        value = d * d;
      else
        value = std::pow(d, beta);
      out(i, j) = out(j, i) = value;
    }
  return SymmetricKernel(std::move(out));
}

}  // namespace coembed
