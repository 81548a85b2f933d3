// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "coembed/coarse.hpp"
#include "coembed/embedding.hpp"
#include "coembed/kernels.hpp"
#include "coembed/metrics.hpp"
#include "coembed/numerics.hpp"

namespace {

using namespace coembed;

Matrix random_symmetric(std::size_t n, std::uint64_t seed) {
  const PointCloud cloud = random_point_cloud(n, n, seed, CloudDistribution::gaussian);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      m(i, j) = m(j, i) = cloud.coords(i, j);
  return m;
}

void BM_EighSymmetric(benchmark::State& state) {
  const Matrix m = random_symmetric(static_cast<std::size_t>(state.range(0)), 17);
  for (auto _ : state) {
    SpectralDecomposition eig = eigh_symmetric(m);
    benchmark::DoNotOptimize(eig.eigenvalues.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EighSymmetric)->Arg(32)->Arg(64)->Arg(128)->Arg(200)->Complexity();

void BM_CheckNegativeDefinite(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const PointCloud cloud = random_point_cloud(n, 6, 23);
  const SymmetricKernel kernel = snowflake_kernel(cloud, 1.5);
  for (auto _ : state) {
    DefinitenessReport r = check_negative_definite(kernel);
    benchmark::DoNotOptimize(r.pass);
  }
}
BENCHMARK(BM_CheckNegativeDefinite)->Arg(16)->Arg(64)->Arg(128);

void BM_SnowflakeEmbed(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const PointCloud cloud = random_point_cloud(n, 8, 31);
  for (auto _ : state) {
    Embedding e = snowflake_embed(cloud, 1.5);
    benchmark::DoNotOptimize(e.coords.data());
  }
}
BENCHMARK(BM_SnowflakeEmbed)->Arg(16)->Arg(40)->Arg(80);

void BM_EmpiricalModuli(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const PointCloud cloud = random_point_cloud(n, 4, 47);
  const FiniteMetric metric = lp_distance_matrix(cloud, 1.0);
  const Embedding e = snowflake_embed(cloud, 1.0);
  for (auto _ : state) {
    ModuliReport r = empirical_moduli(metric, e);
    benchmark::DoNotOptimize(r.achieved.data());
  }
}
BENCHMARK(BM_EmpiricalModuli)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
