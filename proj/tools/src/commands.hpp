// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

namespace coembed::cli {

// Exit codes shared by every subcommand:
//   0 = pass / success, 1 = fail / definiteness refusal, 2 = input error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

struct CheckArgs {
  std::string input;
  std::string format = "matrix";  // matrix | points
  double p = 2.0;                 // l_p exponent for points input
  double beta = 1.0;              // power applied to distances / matrix entries
  double tol = -1.0;              // < 0: 1e-9 * scale
  bool json = false;
};

struct EmbedArgs {
  std::string input;
  std::string format = "matrix";
  std::string output;  // coordinates CSV; optional
  double p = 2.0;      // snowflake / points-format exponent
  std::size_t base = 0;
  double tol = -1.0;
  bool json = false;
};

struct ModuliArgs {
  std::string input;   // metric CSV
  std::string coords;  // embedding coordinates (points CSV)
  std::string rho1;    // expression preset or breakpoint CSV; optional
  std::string rho2;
  std::string output;  // plot CSV; optional
  bool json = false;
};

struct TransformArgs {
  std::string input;
  std::string output;  // optional; stdout otherwise
  double exp_t = 0.0;  // set when exponential mode
  double power_alpha = 0.0;
  bool has_exp = false;
  bool has_power = false;
  bool json = false;
};

struct LevyArgs {
  double x = 1.0;
  double alpha = 0.5;
  double lower = 1e-14;
  double upper = 1e14;
  std::size_t nodes = 20000;
  bool json = false;
};

struct GenArgs {
  std::string kind = "cloud";  // cloud | graph
  std::size_t n = 10;
  std::size_t dim = 2;
  double p = 2.0;
  std::uint64_t seed = 0;
  std::string dist = "uniform";   // uniform | gaussian
  std::string emit = "points";    // points | metric (cloud only)
  std::string output;
  bool json = false;
};

int run_check(const CheckArgs& args, bool negative);
int run_embed_schoenberg(const EmbedArgs& args);
int run_snowflake(const EmbedArgs& args);
int run_isometric_test(const EmbedArgs& args);
int run_moduli(const ModuliArgs& args);
int run_transform(const TransformArgs& args);
int run_levy_check(const LevyArgs& args);
int run_gen(const GenArgs& args);

}  // namespace coembed::cli
