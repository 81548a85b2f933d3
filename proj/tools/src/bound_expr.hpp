// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "coembed/coarse.hpp"

namespace coembed::cli {

// Bound expression presets: "t^B" (B > 0) and "A*t+B" (A, B >= 0), including
// the short forms "t", "A*t", "t+B" and a plain constant. Anything else must
// be supplied as a breakpoint CSV.
struct BoundSpec {
  enum class Kind { power, affine } kind = Kind::affine;
  double beta = 1.0;          // power exponent
  double a = 0.0, b = 0.0;    // affine a*t + b

  double operator()(double t) const;
};

BoundSpec parse_bound_expr(const std::string& text);

// Sample a preset at the given abscissas (sorted, distinct). Checks against
// the sampled function are exact at those points. An empty list yields the
// single breakpoint (0, f(0)).
MonotoneStepFunction sample_bound(const BoundSpec& spec,
                                  const std::vector<double>& ts);

// An expression preset, or a path to a breakpoint CSV when `text` names a
// readable file.
MonotoneStepFunction resolve_bound(const std::string& text,
                                   const std::vector<double>& sample_ts);

}  // namespace coembed::cli
