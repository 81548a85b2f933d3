// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <iostream>

#include "coembed/errors.hpp"
#include "commands.hpp"

namespace cli = coembed::cli;

int main(int argc, char** argv) {
  CLI::App app{"coembed: definiteness tests for kernels on finite point sets, "
               "Euclidean kernel embeddings, snowflake embeddings of l_p "
               "clouds, and empirical coarse-embedding moduli"};
  app.require_subcommand(1);

  cli::CheckArgs check_args;
  auto add_check = [&](CLI::App* cmd) {
    cmd->add_option("--input", check_args.input, "input CSV file")->required();
    cmd->add_option("--format", check_args.format, "matrix|points (default matrix)");
    cmd->add_option("--p", check_args.p, "l_p exponent for points input (default 2)");
    cmd->add_option("--beta", check_args.beta,
                    "power applied to distances/entries (default 1)");
    cmd->add_option("--tol", check_args.tol, "absolute tolerance (default 1e-9*scale)");
    cmd->add_flag("--json", check_args.json, "print a JSON report");
  };
  CLI::App* check_pd = app.add_subcommand("check-pd", "positive definiteness test");
  CLI::App* check_nd = app.add_subcommand("check-nd", "negative definiteness test");
  add_check(check_pd);
  add_check(check_nd);

  cli::EmbedArgs embed_args;
  auto add_embed = [&](CLI::App* cmd, bool with_base, bool with_format) {
    cmd->add_option("--input", embed_args.input, "input CSV file")->required();
    if (with_format)
      cmd->add_option("--format", embed_args.format, "matrix|points (default matrix)");
    cmd->add_option("--p", embed_args.p, "l_p exponent (default 2)");
    if (with_base)
      cmd->add_option("--base", embed_args.base, "base point index (default 0)");
    cmd->add_option("--output", embed_args.output, "coordinates CSV to write");
    cmd->add_option("--tol", embed_args.tol, "absolute tolerance (default 1e-9*scale)");
    cmd->add_flag("--json", embed_args.json, "print a JSON report");
  };
  CLI::App* embed_schoenberg = app.add_subcommand(
      "embed-schoenberg", "realize a normalized negative definite kernel as "
                          "squared Euclidean distances");
  add_embed(embed_schoenberg, true, false);
  CLI::App* snowflake = app.add_subcommand(
      "snowflake", "embed an l_p point cloud with image distances equal to the "
                   "square root of the p-th power kernel");
  add_embed(snowflake, false, false);
  CLI::App* isometric = app.add_subcommand(
      "isometric-test", "decide isometric embeddability into Euclidean space");
  add_embed(isometric, false, true);

  cli::ModuliArgs moduli_args;
  CLI::App* moduli = app.add_subcommand(
      "moduli", "empirical compression/expansion moduli of an embedding");
  moduli->add_option("--input", moduli_args.input, "metric CSV")->required();
  moduli->add_option("--coords", moduli_args.coords, "embedding coordinates CSV")
      ->required();
  moduli->add_option("--rho1", moduli_args.rho1,
                     "lower bound: t^B, A*t+B, or breakpoint CSV");
  moduli->add_option("--rho2", moduli_args.rho2,
                     "upper bound: t^B, A*t+B, or breakpoint CSV");
  moduli->add_option("--output", moduli_args.output, "plot CSV to write");
  moduli->add_flag("--json", moduli_args.json, "print a JSON report");

  cli::TransformArgs transform_args;
  CLI::App* transform = app.add_subcommand(
      "transform", "elementwise exponential or fractional-power kernel transform");
  transform->add_option("--input", transform_args.input, "matrix CSV")->required();
  CLI::Option* opt_exp =
      transform->add_option("--exp", transform_args.exp_t, "apply exp(-t*N)");
  CLI::Option* opt_power =
      transform->add_option("--power", transform_args.power_alpha, "apply N^alpha");
  transform->add_option("--output", transform_args.output, "matrix CSV to write");
  transform->add_flag("--json", transform_args.json, "print a JSON report");

  cli::LevyArgs levy_args;
  CLI::App* levy = app.add_subcommand(
      "levy-check", "check the subordination identity x^alpha = c_alpha * "
                    "integral of (1-e^{-tx}) t^{-alpha-1}");
  levy->add_option("--x", levy_args.x, "evaluation point, x >= 0")->required();
  levy->add_option("--alpha", levy_args.alpha, "exponent in (0,1)")->required();
  levy->add_option("--lower", levy_args.lower, "quadrature truncation (default 1e-14)");
  levy->add_option("--upper", levy_args.upper, "quadrature truncation (default 1e14)");
  levy->add_option("--nodes", levy_args.nodes, "quadrature nodes (default 20000)");
  levy->add_flag("--json", levy_args.json, "print a JSON report");

  cli::GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "seeded instance generator");
  gen->add_option("--kind", gen_args.kind, "cloud|graph")->required();
  gen->add_option("--n", gen_args.n, "point/vertex count")->required();
  gen->add_option("--dim", gen_args.dim, "cloud dimension (default 2)");
  gen->add_option("--p", gen_args.p, "l_p exponent for --emit metric (default 2)");
  gen->add_option("--seed", gen_args.seed, "RNG seed")->required();
  gen->add_option("--dist", gen_args.dist, "uniform|gaussian (default uniform)");
  gen->add_option("--emit", gen_args.emit, "points|metric (default points)");
  gen->add_option("--output", gen_args.output, "output file (default stdout)");
  gen->add_flag("--json", gen_args.json, "print a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitPass : cli::kExitInputError;
  }

  transform_args.has_exp = opt_exp->count() > 0;
  transform_args.has_power = opt_power->count() > 0;

  try {
    if (check_pd->parsed()) return cli::run_check(check_args, false);
    if (check_nd->parsed()) return cli::run_check(check_args, true);
    if (embed_schoenberg->parsed()) return cli::run_embed_schoenberg(embed_args);
    if (snowflake->parsed()) return cli::run_snowflake(embed_args);
    if (isometric->parsed()) return cli::run_isometric_test(embed_args);
    if (moduli->parsed()) return cli::run_moduli(moduli_args);
    if (transform->parsed()) return cli::run_transform(transform_args);
    if (levy->parsed()) return cli::run_levy_check(levy_args);
    if (gen->parsed()) return cli::run_gen(gen_args);
  } catch (const coembed::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInputError;
  } catch (const coembed::numerical_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInputError;
  }
  return cli::kExitInputError;
}
