// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#include "coembed/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace coembed {

Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

std::vector<double> column(const Matrix& m, std::size_t j) {
  std::vector<double> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m(i, j);
  return out;
}

double frobenius_norm(const Matrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j) * m(i, j);
  return std::sqrt(sum);
}

double max_abs(const Matrix& m) {
  double out = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out = std::max(out, std::abs(m(i, j)));
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out = std::max(out, std::abs(a(i, j) - b(i, j)));
  return out;
}

bool all_finite(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j))) return false;
  return true;
}

double tolerance_scale(const Matrix& m) { return std::max(1.0, max_abs(m)); }

}  // namespace coembed
