// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#include "bound_expr.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "coembed/errors.hpp"
#include "csv_io.hpp"

namespace coembed::cli {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s)
    if (c != ' ' && c != '\t') out.push_back(c);
  return out;
}

std::optional<double> parse_num(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

[[noreturn]] void reject(const std::string& text) {
  throw input_error("unsupported bound expression '" + text +
                    "': expected t^B, A*t+B, or a breakpoint CSV path");
}

}  // namespace

double BoundSpec::operator()(double t) const {
  return kind == Kind::power ? std::pow(t, beta) : a * t + b;
}

BoundSpec parse_bound_expr(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) reject(text);

  BoundSpec spec;
  if (s.rfind("t^", 0) == 0) {
    const auto beta = parse_num(s.substr(2));
    if (!beta || !(*beta > 0.0))
      throw input_error("bound expression '" + text +
                        "': exponent must be a positive number");
    spec.kind = BoundSpec::Kind::power;
    spec.beta = *beta;
    return spec;
  }

  spec.kind = BoundSpec::Kind::affine;
  std::string body = s;
  const auto star = body.find("*t");
  if (star != std::string::npos) {
    const auto a = parse_num(body.substr(0, star));
    if (!a) reject(text);
    spec.a = *a;
    body = body.substr(star + 2);
  } else if (body.rfind("t", 0) == 0) {
    spec.a = 1.0;
    body = body.substr(1);
  }
  if (!body.empty()) {
    if (spec.a != 0.0 || star != std::string::npos || s[0] == 't') {
      if (body[0] != '+') reject(text);
      body = body.substr(1);
    }
    const auto b = parse_num(body);
    if (!b) reject(text);
    spec.b = *b;
  }
  if (spec.a < 0.0 || spec.b < 0.0)
    throw input_error("bound expression '" + text +
                      "': coefficients must be non-negative (bounds are "
                      "non-decreasing and non-negative)");
  return spec;
}

MonotoneStepFunction sample_bound(const BoundSpec& spec,
                                  const std::vector<double>& ts) {
  std::vector<std::pair<double, double>> bp;
  if (ts.empty()) {
    bp.emplace_back(0.0, spec(0.0));
  } else {
    bp.reserve(ts.size());
    for (double t : ts) bp.emplace_back(t, spec(t));
  }
  return MonotoneStepFunction(std::move(bp));
}

MonotoneStepFunction resolve_bound(const std::string& text,
                                   const std::vector<double>& sample_ts) {
  if (std::ifstream probe(text); probe.good())
    return read_breakpoints_csv(text);
  return sample_bound(parse_bound_expr(text), sample_ts);
}

}  // namespace coembed::cli
