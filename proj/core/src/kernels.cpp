// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#include "coembed/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coembed/embedding.hpp"
#include "coembed/numerics.hpp"

namespace coembed {

SymmetricKernel::SymmetricKernel(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    throw input_error("kernel must be a non-empty square matrix");
  if (!all_finite(entries_))
    throw input_error("kernel entries must be finite");
  for (std::size_t i = 0; i + 1 < entries_.rows(); ++i)
    for (std::size_t j = i + 1; j < entries_.cols(); ++j) {
      const double avg = 0.5 * (entries_(i, j) + entries_(j, i));
      entries_(i, j) = entries_(j, i) = avg;
    }
}

double default_definiteness_tolerance(const SymmetricKernel& k) {
  return 1e-9 * tolerance_scale(k.entries());
}

double quadratic_form(const SymmetricKernel& k, const std::vector<double>& c) {
  if (c.size() != k.size())
    throw input_error("quadratic_form: coefficient length mismatch");
  double out = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < k.size(); ++j) row += k(i, j) * c[j];
    out += c[i] * row;
  }
  return out;
}

namespace {

double resolve_tol(const SymmetricKernel& k, double tol) {
  return tol < 0.0 ? default_definiteness_tolerance(k) : tol;
}

// Double centering: (PKP)(i,j) = K(i,j) - rowmean_i - rowmean_j + grandmean,
// the same matrix as centering_projector(n) * K * centering_projector(n).
Matrix double_center(const Matrix& k) {
  const std::size_t n = k.rows();
  std::vector<double> mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += k(i, j);
    mean[i] = sum / static_cast<double>(n);
    grand += sum;
  }
  grand /= static_cast<double>(n) * static_cast<double>(n);
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = k(i, j) - mean[i] - mean[j] + grand;
  return out;
}

void normalize_unit(std::vector<double>& c) {
  double norm = 0.0;
  for (double x : c) norm += x * x;
  norm = std::sqrt(norm);
  if (norm > 0.0)
    for (double& x : c) x /= norm;
}

}  // namespace

DefinitenessReport check_positive_definite(const SymmetricKernel& k, double tol) {
  DefinitenessReport r;
  r.tolerance_used = resolve_tol(k, tol);
  const SpectralDecomposition eig = eigh_symmetric(k.entries());
  r.extremal_eigenvalue = eig.eigenvalues.front();
  r.pass = r.extremal_eigenvalue >= -r.tolerance_used;
  if (!r.pass) {
    std::vector<double> c = column(eig.eigenvectors, 0);
    r.quadratic_form_value = quadratic_form(k, c);
    r.witness = std::move(c);
  }
  return r;
}

DefinitenessReport check_negative_definite(const SymmetricKernel& k, double tol) {
  DefinitenessReport r;
  r.tolerance_used = resolve_tol(k, tol);
  const SpectralDecomposition eig = eigh_symmetric(double_center(k.entries()));
  r.extremal_eigenvalue = eig.eigenvalues.back();
  r.pass = r.extremal_eigenvalue <= r.tolerance_used;
  if (!r.pass) {
    std::vector<double> c = column(eig.eigenvectors, k.size() - 1);
    // Eigenvectors of nonzero centered eigenvalues are mean-zero up to
    // roundoff; re-center so the witness sums to zero within 1e-12.
    double mean = 0.0;
    for (double x : c) mean += x;
    mean /= static_cast<double>(c.size());
    for (double& x : c) x -= mean;
    normalize_unit(c);
    r.quadratic_form_value = quadratic_form(k, c);
    r.witness = std::move(c);
  }
  return r;
}

bool is_normalized(const SymmetricKernel& k, KernelKind kind) {
  const double target = kind == KernelKind::positive ? 1.0 : 0.0;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (std::abs(k(i, i) - target) > 1e-12) return false;
  return true;
}

SymmetricKernel schoenberg_transform(const SymmetricKernel& n, double t) {
  if (!(t > 0.0)) throw input_error("schoenberg_transform: t must be positive");
  Matrix out(n.size(), n.size());
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j) {
      const double e = std::exp(-t * n(i, j));
      if (!std::isfinite(e))
        throw numerical_error("schoenberg_transform: exp(-t*N) overflowed at (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")");
      out(i, j) = e;
    }
  return SymmetricKernel(std::move(out));
}

SymmetricKernel fractional_power(const SymmetricKernel& n, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw input_error("fractional_power: alpha must lie in (0, 1]");
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      if (n(i, j) < 0.0)
        throw input_error("fractional_power: negative entry at (" +
                          std::to_string(i) + ", " + std::to_string(j) + ")");
  if (alpha == 1.0) return n;
  Matrix out(n.size(), n.size());
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      out(i, j) = std::pow(n(i, j), alpha);
  return SymmetricKernel(std::move(out));
}

SymmetricKernel zero_extension(const SymmetricKernel& k, std::size_t total_n,
                               const std::vector<std::size_t>& placement) {
  if (placement.size() != k.size())
    throw input_error("zero_extension: placement must map every source index");
  if (total_n < k.size())
    throw input_error("zero_extension: total_n smaller than the source set");
  std::vector<bool> used(total_n, false);
  for (std::size_t i = 0; i < placement.size(); ++i) {
    if (placement[i] >= total_n)
      throw input_error("zero_extension: placement target " +
                        std::to_string(placement[i]) + " out of range");
    if (used[placement[i]])
      throw input_error("zero_extension: placement not injective at target " +
                        std::to_string(placement[i]));
    used[placement[i]] = true;
  }
  Matrix out(total_n, total_n);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = 0; j < k.size(); ++j)
      out(placement[i], placement[j]) = k(i, j);
  return SymmetricKernel(std::move(out));
}

SymmetricKernel induced_kernel(const Embedding& e) {
  Matrix out(e.n, e.n);
  for (std::size_t i = 0; i + 1 < e.n; ++i)
    for (std::size_t j = i + 1; j < e.n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < e.m; ++k) {
        const double d = e.coords(i, k) - e.coords(j, k);
        sum += d * d;
      }
      out(i, j) = out(j, i) = sum;
    }
  return SymmetricKernel(std::move(out));
}

namespace {

void validate_levy_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw input_error("levy: alpha must lie in (0, 1)");
}

double levy_integral(double x, double alpha, const QuadratureParams& quad) {
  // -expm1(-t*x) = 1 - e^{-tx} without cancellation near t = 0.
  return log_quadrature(
      [x, alpha](double t) { return -std::expm1(-t * x) * std::pow(t, -alpha - 1.0); },
      quad.lower, quad.upper, quad.nodes);
}

}  // namespace

double levy_constant(double alpha, const QuadratureParams& quad) {
  validate_levy_alpha(alpha);
  const double integral = levy_integral(1.0, alpha, quad);
  if (!std::isfinite(integral) || integral <= 0.0)
    throw numerical_error("levy_constant: quadrature produced a non-positive value");
  return 1.0 / integral;
}

LevySides verify_levy_representation(double x, double alpha,
                                     const QuadratureParams& quad) {
  validate_levy_alpha(alpha);
  if (x < 0.0) throw input_error("verify_levy_representation: x must be >= 0");
  LevySides sides;
  sides.lhs = std::pow(x, alpha);
  sides.rhs = levy_constant(alpha, quad) * levy_integral(x, alpha, quad);
  return sides;
}

}  // namespace coembed
