// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#include "coembed/coarse.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <tuple>

namespace coembed {

MonotoneStepFunction::MonotoneStepFunction(
    std::vector<std::pair<double, double>> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.empty())
    throw input_error("MonotoneStepFunction: at least one breakpoint required");
  double prev_t = -1.0;
  double prev_v = -1.0;
  for (const auto& [t, v] : breakpoints_) {
    if (!std::isfinite(t) || !std::isfinite(v))
      throw input_error("MonotoneStepFunction: breakpoints must be finite");
    if (t < 0.0 || v < 0.0)
      throw input_error("MonotoneStepFunction: breakpoints must be non-negative");
    if (t <= prev_t)
      throw input_error("MonotoneStepFunction: t values must be strictly increasing");
    if (v < prev_v)
      throw input_error("MonotoneStepFunction: values must be non-decreasing");
    prev_t = t;
    prev_v = v;
  }
}

double MonotoneStepFunction::operator()(double t) const {
  const auto& bp = breakpoints_;
  if (t <= bp.front().first) return bp.front().second;
  if (t >= bp.back().first) {
    if (bp.size() == 1) return bp.back().second;
    const auto& [t1, v1] = bp[bp.size() - 2];
    const auto& [t2, v2] = bp.back();
    return v2 + (v2 - v1) / (t2 - t1) * (t - t2);
  }
  const auto it = std::upper_bound(
      bp.begin(), bp.end(), t,
      [](double x, const std::pair<double, double>& b) { return x < b.first; });
  const auto& [t2, v2] = *it;
  const auto& [t1, v1] = *(it - 1);
  return v1 + (v2 - v1) * (t - t1) / (t2 - t1);
}

ModuliReport empirical_moduli(const FiniteMetric& m, const Embedding& e) {
  if (m.n != e.n)
    throw input_error("empirical_moduli: metric and embedding sizes differ");

  struct Pair {
    double d;
    double g;
  };
  std::vector<Pair> pairs;
  pairs.reserve(m.n * (m.n - 1) / 2);
  for (std::size_t i = 0; i + 1 < m.n; ++i)
    for (std::size_t j = i + 1; j < m.n; ++j)
      pairs.push_back({m.d(i, j), image_distance(e, i, j)});

  ModuliReport r;
  if (pairs.empty()) return r;

  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    return std::tie(a.d, a.g) < std::tie(b.d, b.g);
  });

  const std::size_t count = pairs.size();
  std::vector<double> suffix_min(count);
  std::vector<double> prefix_max(count);
  suffix_min[count - 1] = pairs[count - 1].g;
  for (std::size_t i = count - 1; i-- > 0;)
    suffix_min[i] = std::min(pairs[i].g, suffix_min[i + 1]);
  prefix_max[0] = pairs[0].g;
  for (std::size_t i = 1; i < count; ++i)
    prefix_max[i] = std::max(pairs[i].g, prefix_max[i - 1]);

  for (std::size_t lo = 0; lo < count;) {
    std::size_t hi = lo;
    while (hi + 1 < count && pairs[hi + 1].d == pairs[lo].d) ++hi;
    r.achieved.push_back(pairs[lo].d);
    r.compression.push_back(suffix_min[lo]);  // inf over pairs with d >= t
    r.expansion.push_back(prefix_max[hi]);    // sup over pairs with d <= t
    lo = hi + 1;
  }
  return r;
}

namespace {

double violation_tol(double tol, double value, double lo, double hi) {
  if (tol >= 0.0) return tol;
  return 1e-9 * std::max({1.0, std::abs(value), std::abs(lo), std::abs(hi)});
}

ViolationReport check_pairs(const Matrix& distances, std::size_t n,
                            const std::function<double(std::size_t, std::size_t)>& value,
                            const MonotoneStepFunction& rho1,
                            const MonotoneStepFunction& rho2, double tol) {
  ViolationReport report;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = distances(i, j);
      const double v = value(i, j);
      const double lo = rho1(d);
      const double hi = rho2(d);
      const double eps = violation_tol(tol, v, lo, hi);
      if (v < lo - eps)
        report.violations.push_back({i, j, d, v, lo, hi, true});
      else if (v > hi + eps)
        report.violations.push_back({i, j, d, v, lo, hi, false});
    }
  return report;
}

}  // namespace

ViolationReport verify_coarse_bounds(const FiniteMetric& m, const Embedding& e,
                                     const MonotoneStepFunction& rho1,
                                     const MonotoneStepFunction& rho2, double tol) {
  if (m.n != e.n)
    throw input_error("verify_coarse_bounds: metric and embedding sizes differ");
  return check_pairs(
      m.d, m.n,
      [&e](std::size_t i, std::size_t j) { return image_distance(e, i, j); },
      rho1, rho2, tol);
}

ViolationReport verify_kernel_bounds(const SymmetricKernel& n, const FiniteMetric& m,
                                     const MonotoneStepFunction& rho1,
                                     const MonotoneStepFunction& rho2, double tol) {
  if (m.n != n.size())
    throw input_error("verify_kernel_bounds: kernel and metric sizes differ");
  return check_pairs(
      m.d, m.n, [&n](std::size_t i, std::size_t j) { return n(i, j); }, rho1,
      rho2, tol);
}

FamilyCheckResult uniform_family_check(const std::vector<FamilyMember>& family,
                                       const MonotoneStepFunction& rho1,
                                       const MonotoneStepFunction& rho2,
                                       double tol) {
  FamilyCheckResult result;
  result.member_reports.reserve(family.size());
  for (const FamilyMember& member : family) {
    result.member_reports.push_back(
        verify_coarse_bounds(member.metric, member.embedding, rho1, rho2, tol));
    if (!result.member_reports.back().pass()) result.pass = false;
  }
  return result;
}

MonotoneStepFunction compression_bound(const ModuliReport& r) {
  std::vector<std::pair<double, double>> bp;
  bp.reserve(r.achieved.size());
  for (std::size_t i = 0; i < r.achieved.size(); ++i)
    bp.emplace_back(r.achieved[i], r.compression[i]);
  return MonotoneStepFunction(std::move(bp));
}

MonotoneStepFunction expansion_bound(const ModuliReport& r) {
  std::vector<std::pair<double, double>> bp;
  bp.reserve(r.achieved.size());
  for (std::size_t i = 0; i < r.achieved.size(); ++i)
    bp.emplace_back(r.achieved[i], r.expansion[i]);
  return MonotoneStepFunction(std::move(bp));
}

}  // namespace coembed
