// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coembed/coarse.hpp"
#include "coembed/embedding.hpp"
#include "coembed/errors.hpp"
#include "coembed/kernels.hpp"
#include "coembed/metrics.hpp"
#include "bound_expr.hpp"
#include "csv_io.hpp"
#include "json_report.hpp"

namespace coembed::cli {

namespace {

SymmetricKernel load_check_kernel(const CheckArgs& args) {
  if (args.format == "points") {
    const PointCloud cloud = read_points_csv(args.input);
    const FiniteMetric metric = lp_distance_matrix(cloud, args.p);
    return metric_power_kernel(metric, args.beta);
  }
  if (args.format != "matrix")
    throw input_error("unknown --format '" + args.format + "' (matrix|points)");
  Matrix m = read_matrix_csv(args.input);
  if (args.beta != 1.0) {
    if (!(args.beta > 0.0)) throw input_error("--beta must be positive");
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) < 0.0)
          throw input_error("--beta requires non-negative matrix entries; "
                            "negative entry at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
        m(i, j) = std::pow(m(i, j), args.beta);
      }
  }
  return SymmetricKernel(std::move(m));
}

json check_inputs(const CheckArgs& args) {
  json inputs;
  inputs["file"] = args.input;
  inputs["format"] = args.format;
  inputs["beta"] = args.beta;
  if (args.format == "points") inputs["p"] = args.p;
  return inputs;
}

double max_kernel_reconstruction_error(const Embedding& e, const SymmetricKernel& n) {
  // Realized squared distances against the target kernel.
  const SymmetricKernel realized = induced_kernel(e);
  return max_abs_diff(realized.entries(), n.entries());
}

FiniteMetric load_metric_for(const EmbedArgs& args) {
  if (args.format == "points")
    return lp_distance_matrix(read_points_csv(args.input), args.p);
  if (args.format != "matrix")
    throw input_error("unknown --format '" + args.format + "' (matrix|points)");
  return make_finite_metric(read_matrix_csv(args.input));
}

}  // namespace

int run_check(const CheckArgs& args, bool negative) {
  const SymmetricKernel kernel = load_check_kernel(args);
  const DefinitenessReport r = negative
                                   ? check_negative_definite(kernel, args.tol)
                                   : check_positive_definite(kernel, args.tol);
  json report = make_report(negative ? "check-nd" : "check-pd", r.pass,
                            check_inputs(args));
  attach_definiteness(report, r);
  print_report(report, args.json);
  return r.pass ? kExitPass : kExitFail;
}

int run_embed_schoenberg(const EmbedArgs& args) {
  json inputs;
  inputs["file"] = args.input;
  inputs["base"] = args.base;
  const SymmetricKernel n = SymmetricKernel(read_matrix_csv(args.input));
  try {
    const Embedding e = schoenberg_embed(n, args.base, args.tol);
    json report = make_report("embed-schoenberg", true, std::move(inputs));
    report["tolerance"] = e.provenance.tolerance;
    report["max_reconstruction_error"] = max_kernel_reconstruction_error(e, n);
    if (!args.output.empty()) {
      write_points_csv(args.output, e.coords);
      report["output"] = args.output;
    }
    print_report(report, args.json);
    return kExitPass;
  } catch (const definiteness_error& err) {
    json report = make_report("embed-schoenberg", false, std::move(inputs));
    attach_definiteness(report, err.report());
    print_report(report, args.json);
    return kExitFail;
  }
}

int run_snowflake(const EmbedArgs& args) {
  json inputs;
  inputs["file"] = args.input;
  inputs["p"] = args.p;
  const PointCloud cloud = read_points_csv(args.input);
  try {
    const Embedding e = snowflake_embed(cloud, args.p, args.tol);
    const SymmetricKernel n = snowflake_kernel(cloud, args.p);
    double max_err = 0.0;
    for (std::size_t i = 0; i + 1 < e.n; ++i)
      for (std::size_t j = i + 1; j < e.n; ++j)
        max_err = std::max(max_err, std::abs(image_distance(e, i, j) -
                                             std::sqrt(n(i, j))));
    json report = make_report("snowflake", true, std::move(inputs));
    report["tolerance"] = e.provenance.tolerance;
    report["max_reconstruction_error"] = max_err;
    if (!args.output.empty()) {
      write_points_csv(args.output, e.coords);
      report["output"] = args.output;
    }
    print_report(report, args.json);
    return kExitPass;
  } catch (const definiteness_error& err) {
    json report = make_report("snowflake", false, std::move(inputs));
    attach_definiteness(report, err.report());
    print_report(report, args.json);
    return kExitFail;
  }
}

int run_isometric_test(const EmbedArgs& args) {
  json inputs;
  inputs["file"] = args.input;
  inputs["format"] = args.format;
  if (args.format == "points") inputs["p"] = args.p;
  const FiniteMetric metric = load_metric_for(args);
  const IsometricTestResult result = isometric_hilbert_test(metric, args.tol);

  json report = make_report("isometric-test", result.embeddable, std::move(inputs));
  attach_definiteness(report, result.report);
  if (result.embeddable) {
    const Embedding& e = *result.embedding;
    double max_err = 0.0;
    for (std::size_t i = 0; i + 1 < e.n; ++i)
      for (std::size_t j = i + 1; j < e.n; ++j)
        max_err = std::max(max_err,
                           std::abs(image_distance(e, i, j) - metric.d(i, j)));
    report["max_reconstruction_error"] = max_err;
    if (!args.output.empty()) {
      write_points_csv(args.output, e.coords);
      report["output"] = args.output;
    }
  }
  print_report(report, args.json);
  return result.embeddable ? kExitPass : kExitFail;
}

int run_moduli(const ModuliArgs& args) {
  const FiniteMetric metric = make_finite_metric(read_matrix_csv(args.input));
  const PointCloud cloud = read_points_csv(args.coords);
  Embedding e;
  e.n = cloud.n;
  e.m = cloud.dim;
  e.coords = cloud.coords;

  ModuliReport moduli = empirical_moduli(metric, e);

  json inputs;
  inputs["file"] = args.input;
  inputs["coords"] = args.coords;

  bool pass = true;
  if (!args.rho1.empty() || !args.rho2.empty()) {
    if (args.rho1.empty() || args.rho2.empty())
      throw input_error("supply both --rho1 and --rho2 or neither");
    inputs["rho1"] = args.rho1;
    inputs["rho2"] = args.rho2;
    const MonotoneStepFunction rho1 = resolve_bound(args.rho1, moduli.achieved);
    const MonotoneStepFunction rho2 = resolve_bound(args.rho2, moduli.achieved);
    moduli.violations =
        verify_coarse_bounds(metric, e, rho1, rho2).violations;
    pass = moduli.violations.empty();
  }

  json report = make_report("moduli", pass, std::move(inputs));
  report["violations"] = violations_json(moduli.violations);
  if (!moduli.achieved.empty()) {
    // The divergence requirement on the lower modulus is undecidable from
    // finite data; report where the data stops instead.
    report["max_achieved_distance"] = moduli.achieved.back();
    report["compression_at_max"] = moduli.compression.back();
  }
  if (!args.output.empty()) {
    std::ofstream out(args.output);
    if (!out) throw input_error("cannot open output file: " + args.output);
    write_moduli_csv(out, moduli);
    report["output"] = args.output;
  }
  if (args.json)
    print_report(report, true);
  else if (args.output.empty())
    write_moduli_csv(std::cout, moduli);
  else
    print_report(report, false);
  return pass ? kExitPass : kExitFail;
}

int run_transform(const TransformArgs& args) {
  if (args.has_exp == args.has_power)
    throw input_error("transform: choose exactly one of --exp or --power");
  const SymmetricKernel kernel = SymmetricKernel(read_matrix_csv(args.input));
  const SymmetricKernel out = args.has_exp
                                  ? schoenberg_transform(kernel, args.exp_t)
                                  : fractional_power(kernel, args.power_alpha);
  json inputs;
  inputs["file"] = args.input;
  if (args.has_exp) inputs["t"] = args.exp_t;
  if (args.has_power) inputs["alpha"] = args.power_alpha;

  json report = make_report("transform", true, std::move(inputs));
  if (!args.output.empty()) {
    write_matrix_csv(args.output, out.entries());
    report["output"] = args.output;
  }
  if (args.json)
    print_report(report, true);
  else if (args.output.empty())
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < out.size(); ++j) {
        if (j > 0) std::cout << ',';
        std::cout << format_double(out(i, j));
      }
      std::cout << '\n';
    }
  else
    print_report(report, false);
  return kExitPass;
}

int run_levy_check(const LevyArgs& args) {
  QuadratureParams quad{args.lower, args.upper, args.nodes};
  const LevySides sides = verify_levy_representation(args.x, args.alpha, quad);
  const double denom = std::max({std::abs(sides.lhs), std::abs(sides.rhs), 1e-300});
  const double rel =
      (sides.lhs == sides.rhs) ? 0.0 : std::abs(sides.rhs - sides.lhs) / denom;

  json inputs;
  inputs["x"] = args.x;
  inputs["alpha"] = args.alpha;
  inputs["nodes"] = args.nodes;

  json report = make_report("levy-check", true, std::move(inputs));
  report["lhs"] = sides.lhs;
  report["rhs"] = sides.rhs;
  report["relative_error"] = rel;
  report["levy_constant"] = levy_constant(args.alpha, quad);
  print_report(report, args.json);
  return kExitPass;
}

int run_gen(const GenArgs& args) {
  json inputs;
  inputs["kind"] = args.kind;
  inputs["n"] = args.n;
  inputs["seed"] = args.seed;

  Matrix payload;
  bool points_format = false;

  if (args.kind == "cloud") {
    inputs["dim"] = args.dim;
    inputs["dist"] = args.dist;
    CloudDistribution dist;
    if (args.dist == "uniform")
      dist = CloudDistribution::uniform_box;
    else if (args.dist == "gaussian")
      dist = CloudDistribution::gaussian;
    else
      throw input_error("unknown --dist '" + args.dist + "' (uniform|gaussian)");
    const PointCloud cloud = random_point_cloud(args.n, args.dim, args.seed, dist);
    if (args.emit == "points") {
      payload = cloud.coords;
      points_format = true;
    } else if (args.emit == "metric") {
      inputs["p"] = args.p;
      payload = lp_distance_matrix(cloud, args.p).d;
    } else {
      throw input_error("unknown --emit '" + args.emit + "' (points|metric)");
    }
  } else if (args.kind == "graph") {
    // Random spanning tree plus n/2 extra edges, all from the seeded stream.
    std::mt19937_64 gen(args.seed);
    std::set<std::pair<std::size_t, std::size_t>> edge_set;
    for (std::size_t i = 1; i < args.n; ++i) {
      const std::size_t parent = gen() % i;
      edge_set.insert({parent, i});
    }
    for (std::size_t attempt = 0; attempt < args.n / 2; ++attempt) {
      std::size_t a = gen() % args.n;
      std::size_t b = gen() % args.n;
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      edge_set.insert({a, b});
    }
    const std::vector<std::pair<std::size_t, std::size_t>> edges(edge_set.begin(),
                                                                 edge_set.end());
    payload = graph_shortest_path_metric(args.n, edges).d;
  } else {
    throw input_error("unknown --kind '" + args.kind + "' (cloud|graph)");
  }

  json report = make_report("gen", true, std::move(inputs));
  if (!args.output.empty()) {
    if (points_format)
      write_points_csv(args.output, payload);
    else
      write_matrix_csv(args.output, payload);
    report["output"] = args.output;
    print_report(report, args.json);
  } else {
    if (points_format) std::cout << payload.rows() << ' ' << payload.cols() << '\n';
    for (std::size_t i = 0; i < payload.rows(); ++i) {
      for (std::size_t j = 0; j < payload.cols(); ++j) {
        if (j > 0) std::cout << ',';
        std::cout << format_double(payload(i, j));
      }
      std::cout << '\n';
    }
  }
  return kExitPass;
}

}  // namespace coembed::cli
