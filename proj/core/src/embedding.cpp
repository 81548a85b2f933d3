// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#include "coembed/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "coembed/numerics.hpp"

namespace coembed {

double image_distance(const Embedding& e, std::size_t i, std::size_t j) {
  double sum = 0.0;
  for (std::size_t k = 0; k < e.m; ++k) {
    const double d = e.coords(i, k) - e.coords(j, k);
    sum += d * d;
  }
  return std::sqrt(sum);
}

Embedding moore_factorize(const SymmetricKernel& k, double tol) {
  const double used = tol < 0.0 ? default_definiteness_tolerance(k) : tol;
  const std::size_t n = k.size();
  const SpectralDecomposition eig = eigh_symmetric(k.entries());

  if (eig.eigenvalues.front() < -used) {
    DefinitenessReport r;
    r.pass = false;
    r.extremal_eigenvalue = eig.eigenvalues.front();
    r.tolerance_used = used;
    std::vector<double> c = column(eig.eigenvectors, 0);
    r.quadratic_form_value = quadratic_form(k, c);
    r.witness = std::move(c);
    throw definiteness_error("moore_factorize: kernel is not positive semidefinite "
                             "within tolerance", r);
  }

  // Numerical rank: eigenvalues above tol, taken in descending order.
  std::vector<std::size_t> kept;
  for (std::size_t idx = n; idx-- > 0;)
    if (eig.eigenvalues[idx] > used) kept.push_back(idx);

  const std::size_t m = std::max<std::size_t>(kept.size(), 1);
  Embedding e;
  e.n = n;
  e.m = m;
  e.coords = Matrix(n, m);
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const double root = std::sqrt(eig.eigenvalues[kept[c]]);
    for (std::size_t i = 0; i < n; ++i)
      e.coords(i, c) = root * eig.eigenvectors(i, kept[c]);
  }
  e.provenance = {EmbeddingMethod::moore, 0, 0.0, used};
  return e;
}

Embedding schoenberg_embed(const SymmetricKernel& nk, std::size_t base, double tol) {
  const std::size_t n = nk.size();
  if (base >= n)
    throw input_error("schoenberg_embed: base index " + std::to_string(base) +
                      " out of range for n = " + std::to_string(n));
  if (!is_normalized(nk, KernelKind::negative))
    throw input_error("schoenberg_embed: kernel diagonal must be zero");
  const double used = tol < 0.0 ? default_definiteness_tolerance(nk) : tol;

  DefinitenessReport report = check_negative_definite(nk, used);
  if (!report.pass)
    throw definiteness_error("schoenberg_embed: kernel is not negative definite "
                             "within tolerance", std::move(report));

  EmbeddingProvenance prov{EmbeddingMethod::schoenberg, base, 0.0, used};
  if (n == 1) {
    Embedding e;
    e.n = 1;
    e.m = 1;
    e.coords = Matrix(1, 1);
    e.provenance = prov;
    return e;
  }

  // Gram matrix at the base point over the remaining indices.
  std::vector<std::size_t> keep;
  keep.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    if (i != base) keep.push_back(i);

  Matrix gram(n - 1, n - 1);
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a; b < keep.size(); ++b) {
      const double v = 0.5 * (nk(keep[a], base) + nk(keep[b], base) -
                              nk(keep[a], keep[b]));
      gram(a, b) = gram(b, a) = v;
    }

  // The centered test passed within `used`; the base-point Gram satisfies
  // lambda_min >= -(n/2) * used, so the factorization gets a matching slack.
  Embedding inner = moore_factorize(SymmetricKernel(std::move(gram)),
                                    used * static_cast<double>(n));

  Embedding e;
  e.n = n;
  e.m = inner.m;
  e.coords = Matrix(n, inner.m);
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t c = 0; c < inner.m; ++c)
      e.coords(keep[a], c) = inner.coords(a, c);
  e.provenance = prov;
  return e;
}

IsometricTestResult isometric_hilbert_test(const FiniteMetric& m, double tol) {
  MetricAxiomReport axioms = validate_metric(m);
  if (!axioms.all_pass()) {
    std::string which = !axioms.pass.symmetry        ? "symmetry"
                        : !axioms.pass.zero_diagonal ? "zero diagonal"
                        : !axioms.pass.non_negativity ? "non-negativity"
                                                      : "triangle inequality";
    throw input_error("isometric_hilbert_test: metric axiom failed: " + which);
  }
  const SymmetricKernel squared = metric_power_kernel(m, 2.0);
  const double used =
      tol < 0.0 ? default_definiteness_tolerance(squared) : tol;

  IsometricTestResult out;
  out.report = check_negative_definite(squared, used);
  out.embeddable = out.report.pass;
  if (out.embeddable) out.embedding = schoenberg_embed(squared, 0, used);
  return out;
}

SymmetricKernel snowflake_kernel(const PointCloud& p, double p_exponent) {
  if (!(p_exponent > 0.0) || p_exponent > 2.0)
    throw input_error("snowflake: p must lie in (0, 2]");
  Matrix out(p.n, p.n);
  for (std::size_t i = 0; i + 1 < p.n; ++i)
    for (std::size_t j = i + 1; j < p.n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < p.dim; ++k) {
        const double diff = std::abs(p.coords(i, k) - p.coords(j, k));
        if (p_exponent == 2.0)
          sum += diff * diff;
        else if (p_exponent == 1.0)
          sum += diff;
        else
          sum += std::pow(diff, p_exponent);
      }
      out(i, j) = out(j, i) = sum;
    }
  return SymmetricKernel(std::move(out));
}

Embedding snowflake_embed(const PointCloud& p, double p_exponent, double tol) {
  const SymmetricKernel nk = snowflake_kernel(p, p_exponent);
  Embedding e = schoenberg_embed(nk, 0, tol);
  e.provenance.method = EmbeddingMethod::snowflake;
  e.provenance.p = p_exponent;
  return e;
}

}  // namespace coembed
