// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coembed/errors.hpp"
#include "coembed/matrix.hpp"

namespace coembed {

struct Embedding;

// Symmetric kernel on n points. Construction symmetrizes the entries
// (averaging with the transpose) and rejects non-square or non-finite input.
class SymmetricKernel {
 public:
  explicit SymmetricKernel(Matrix entries);
  static SymmetricKernel zero(std::size_t n) { return SymmetricKernel(Matrix(n, n)); }

  std::size_t size() const { return entries_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const Matrix& entries() const { return entries_; }

 private:
  Matrix entries_;
};

enum class KernelKind { positive, negative };

// Outcome of a definiteness test. For a positive test the extremal eigenvalue
// is lambda_min(K); for a negative test it is lambda_max(PKP) with P the
// centering projector. On fail, witness is a unit-norm coefficient vector
// whose quadratic form breaks the sign condition; for negative tests its
// entries sum to zero within 1e-12.
struct DefinitenessReport {
  bool pass = false;
  double extremal_eigenvalue = 0.0;
  std::optional<std::vector<double>> witness;
  std::optional<double> quadratic_form_value;
  double tolerance_used = 0.0;
};

// Raised by constructions that require a definiteness verdict the input does
// not meet; carries the failing report.
class definiteness_error : public std::runtime_error {
 public:
  definiteness_error(const std::string& what, DefinitenessReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const DefinitenessReport& report() const { return report_; }

 private:
  DefinitenessReport report_;
};

// Sentinel: resolve to 1e-9 * max(1, max|entry|) of the kernel under test.
inline constexpr double kDefaultTolerance = -1.0;

double default_definiteness_tolerance(const SymmetricKernel& k);

// sum_ij K(i,j) c_i c_j
double quadratic_form(const SymmetricKernel& k, const std::vector<double>& c);

// pass iff lambda_min(K) >= -tol; witness on fail is the bottom eigenvector.
DefinitenessReport check_positive_definite(const SymmetricKernel& k,
                                           double tol = kDefaultTolerance);

// pass iff lambda_max(PKP) <= tol, equivalent to the quadratic form being
// <= 0 on mean-zero coefficient vectors; witness on fail is the top centered
// eigenvector mapped back to coefficients.
DefinitenessReport check_negative_definite(const SymmetricKernel& k,
                                           double tol = kDefaultTolerance);

// Diagonal identically 1 (positive kind) or 0 (negative kind) within 1e-12.
bool is_normalized(const SymmetricKernel& k, KernelKind kind);

// Elementwise exp(-t * N), t > 0. Carries negative definite kernels to
// positive definite ones; underflow of large t*N to zero is benign.
SymmetricKernel schoenberg_transform(const SymmetricKernel& n, double t);

// Elementwise N^alpha for 0 < alpha <= 1 on a non-negative kernel; preserves
// negative definiteness. alpha = 1 is admitted as the identity.
SymmetricKernel fractional_power(const SymmetricKernel& n, double alpha);

// Place K on the injectively mapped indices of a larger ground set, zero
// elsewhere. Preserves positive definiteness (block structure).
SymmetricKernel zero_extension(const SymmetricKernel& k, std::size_t total_n,
                               const std::vector<std::size_t>& placement);

// N(i,j) = squared Euclidean distance of image points; normalized and
// negative definite for every embedding.
SymmetricKernel induced_kernel(const Embedding& e);

// Truncation and node count for the subordination integral
//   x^alpha = c_alpha * Int_0^inf (1 - e^{-tx}) t^{-alpha-1} dt.
// The defaults keep the relative truncation error below 1e-5 for
// alpha in [0.3, 0.7] and x in [0.1, 10] (lower tail bounded by
// x * lo^{1-alpha}/(1-alpha), upper tail by hi^{-alpha}/alpha).
struct QuadratureParams {
  double lower = 1e-14;
  double upper = 1e14;
  std::size_t nodes = 20000;
};

// c_alpha = 1 / Int (1 - e^{-t}) t^{-alpha-1} dt over the truncated range,
// 0 < alpha < 1. Exposed as a quadrature-derived value only.
double levy_constant(double alpha, const QuadratureParams& quad = {});

struct LevySides {
  double lhs = 0.0;  // x^alpha
  double rhs = 0.0;  // c_alpha * quadrature of (1 - e^{-tx}) t^{-alpha-1}
};

LevySides verify_levy_representation(double x, double alpha,
                                     const QuadratureParams& quad = {});

}  // namespace coembed
