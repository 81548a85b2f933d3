// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#include "coembed/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "coembed/errors.hpp"

namespace coembed {

namespace {

constexpr int kMaxSweeps = 100;

double offdiagonal_frobenius(const Matrix& a) {
  const std::size_t n = a.rows();
  double sum = 0.0;
  for (std::size_t p = 0; p + 1 < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) sum += a(p, q) * a(p, q);
  return std::sqrt(2.0 * sum);
}

void validate_symmetric_input(const Matrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw input_error("eigh_symmetric: matrix must be square and non-empty");
  if (!all_finite(m))
    throw input_error("eigh_symmetric: matrix entries must be finite");
  const double tol = 1e-12 * tolerance_scale(m);
  for (std::size_t i = 0; i + 1 < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol)
        throw input_error("eigh_symmetric: matrix is not symmetric at (" +
                          std::to_string(i) + ", " + std::to_string(j) + ")");
}

}  // namespace

SpectralDecomposition eigh_symmetric(const Matrix& m) {
  validate_symmetric_input(m);
  const std::size_t n = m.rows();

  Matrix a = m;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = a(j, i) = avg;
    }

  Matrix v = Matrix::identity(n);
  const double stop = 1e-12 * frobenius_norm(a);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiagonal_frobenius(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        // Smaller-magnitude root of t^2 + 2*theta*t - 1 = 0; the guarded
        // branch avoids overflow in theta^2 for tiny pivots.
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues[k] = a(src, src);
    // Fixed sign convention: the entry of largest magnitude is positive.
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(v(i, src)) > best) {
        best = std::abs(v(i, src));
        arg = i;
      }
    }
    const double sign = v(arg, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = sign * v(i, src);
  }
  return out;
}

Matrix centering_projector(std::size_t n) {
  if (n == 0) throw input_error("centering_projector: n must be positive");
  Matrix p(n, n, -1.0 / static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) p(i, i) += 1.0;
  return p;
}

double log_quadrature(const std::function<double(double)>& integrand,
                      double lower, double upper, std::size_t nodes) {
  if (!(lower > 0.0) || !(lower < upper) || !std::isfinite(upper))
    throw input_error("log_quadrature: require 0 < lower < upper, both finite");
  if (nodes < 2) throw input_error("log_quadrature: require at least 2 nodes");

  const double log_lo = std::log(lower);
  const double step = (std::log(upper) - log_lo) / static_cast<double>(nodes - 1);

  auto node_at = [&](std::size_t i) {
    if (i == 0) return lower;
    if (i == nodes - 1) return upper;
    return std::exp(log_lo + step * static_cast<double>(i));
  };

  double sum = 0.0;
  double t_prev = node_at(0);
  double y_prev = integrand(t_prev);
  if (!std::isfinite(y_prev))
    throw numerical_error("log_quadrature: integrand not finite at t = " +
                          std::to_string(t_prev));
  for (std::size_t i = 1; i < nodes; ++i) {
    const double t = node_at(i);
    const double y = integrand(t);
    if (!std::isfinite(y))
      throw numerical_error("log_quadrature: integrand not finite at t = " +
                            std::to_string(t));
    sum += 0.5 * (y + y_prev) * (t - t_prev);
    t_prev = t;
    y_prev = y;
  }
  return sum;
}

}  // namespace coembed
