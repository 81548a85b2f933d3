// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coembed/embedding.hpp"
#include "coembed/metrics.hpp"

namespace coembed {

// Non-decreasing bound function given by breakpoints (t, v), t >= 0 strictly
// increasing, v >= 0 non-decreasing. Evaluation: constant at the first value
// left of the first breakpoint, linear interpolation between breakpoints,
// linear continuation with the last segment's slope beyond the last
// breakpoint (slope 0 if there is a single breakpoint).
class MonotoneStepFunction {
 public:
  explicit MonotoneStepFunction(std::vector<std::pair<double, double>> breakpoints);
  double operator()(double t) const;
  const std::vector<std::pair<double, double>>& breakpoints() const {
    return breakpoints_;
  }

 private:
  std::vector<std::pair<double, double>> breakpoints_;
};

struct PairViolation {
  std::size_t i = 0, j = 0;
  double distance = 0.0;  // d(i,j)
  double value = 0.0;     // image distance or kernel entry at the pair
  double lower = 0.0;     // rho1(d)
  double upper = 0.0;     // rho2(d)
  bool below_lower = false;  // otherwise above upper
};

struct ViolationReport {
  std::vector<PairViolation> violations;
  bool pass() const { return violations.empty(); }
};

// Empirical compression/expansion moduli of a candidate embedding: at each
// achieved distance t, compression is inf{|f(x)-f(y)| : d >= t} (the tightest
// admissible lower bound) and expansion is sup{|f(x)-f(y)| : d <= t} (the
// tightest admissible upper bound). Both are non-decreasing and compression
// <= expansion wherever both are defined. Whether the lower bound eventually
// diverges is not decidable from finite data; reports carry the largest
// achieved distance and the compression value there.
struct ModuliReport {
  std::vector<double> achieved;     // sorted distinct distances
  std::vector<double> compression;  // aligned with achieved
  std::vector<double> expansion;    // aligned with achieved
  std::vector<PairViolation> violations;  // filled when checked against bounds
};

ModuliReport empirical_moduli(const FiniteMetric& m, const Embedding& e);

// Every pair must satisfy rho1(d) - tol <= |f_i - f_j| <= rho2(d) + tol; an
// empty report means the finite data is consistent with these bounds. The
// sentinel tolerance resolves to 1e-9 * max(1, |value|, |bounds|) per pair.
ViolationReport verify_coarse_bounds(const FiniteMetric& m, const Embedding& e,
                                     const MonotoneStepFunction& rho1,
                                     const MonotoneStepFunction& rho2,
                                     double tol = kDefaultTolerance);

// Same check at the kernel level: rho1(d) <= N(i,j) <= rho2(d) pairwise.
ViolationReport verify_kernel_bounds(const SymmetricKernel& n, const FiniteMetric& m,
                                     const MonotoneStepFunction& rho1,
                                     const MonotoneStepFunction& rho2,
                                     double tol = kDefaultTolerance);

struct FamilyMember {
  FiniteMetric metric;
  Embedding embedding;
};

struct FamilyCheckResult {
  bool pass = true;
  std::vector<ViolationReport> member_reports;  // one per family member
};

// True iff every member satisfies the shared bounds; the empty family passes
// vacuously. Certifies the finite data only; it does not construct a single
// global embedding.
FamilyCheckResult uniform_family_check(const std::vector<FamilyMember>& family,
                                       const MonotoneStepFunction& rho1,
                                       const MonotoneStepFunction& rho2,
                                       double tol = kDefaultTolerance);

// The empirical moduli as bound functions on the achieved distances; by
// construction these never report a violation against their own embedding.
MonotoneStepFunction compression_bound(const ModuliReport& r);
MonotoneStepFunction expansion_bound(const ModuliReport& r);

}  // namespace coembed
