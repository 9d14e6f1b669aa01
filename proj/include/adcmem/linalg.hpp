// Copyright 2026 The adcmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex linear algebra for small matrices: Kronecker products,
// a cyclic Jacobi Hermitian eigensolver and a Taylor scaling-and-squaring
// matrix exponential. Everything here is a pure function of its inputs.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adcmem/errors.hpp"

namespace adcmem {

using complex = std::complex<double>;

/// Largest supported matrix dimension (12 qubits).
inline constexpr std::size_t max_matrix_dim = 4096;

/// Dense square complex matrix stored row-major.
class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim) : dim_(checked_dim(dim)), entries_(dim * dim) {}

  ComplexMatrix(std::size_t dim, std::vector<complex> entries)
      : dim_(checked_dim(dim)), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
      throw contract_error("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                           " entries, got " + std::to_string(entries_.size()));
    }
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<complex>> rows)
      : ComplexMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) throw contract_error("ComplexMatrix: rows must form a square");
      std::size_t j = 0;
      for (const auto& v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  static ComplexMatrix diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
  }

  std::size_t dim() const noexcept { return dim_; }

  complex& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * dim_ + j]; }
  const complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * dim_ + j];
  }

  std::span<const complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  ComplexMatrix conjugate() const {
    ComplexMatrix r = *this;
    for (auto& v : r.entries_) v = std::conj(v);
    return r;
  }

  complex trace() const noexcept {
    complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest entry modulus.
  double max_abs() const noexcept {
    double m = 0.0;
    for (const auto& v : entries_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius_norm() const noexcept {
    double s = 0.0;
    for (const auto& v : entries_) s += std::norm(v);
    return std::sqrt(s);
  }

  /// Maximum absolute column sum.
  double one_norm() const noexcept {
    double best = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < dim_; ++i) s += std::abs((*this)(i, j));
      best = std::max(best, s);
    }
    return best;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }

  ComplexMatrix& operator*=(complex s) noexcept {
    for (auto& v : entries_) v *= s;
    return *this;
  }

  /// Adds s * o without a temporary.
  ComplexMatrix& add_scaled(const ComplexMatrix& o, complex s) {
    require_same_dim(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += s * o.entries_[k];
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, complex s) { return a *= s; }
  friend ComplexMatrix operator*(complex s, ComplexMatrix a) { return a *= s; }

  // Exact zeros of the left factor are skipped: Kraus operators and
  // Liouvillians here are mostly zero.
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
      complex* out = &r.entries_[i * n];
      for (std::size_t k = 0; k < n; ++k) {
        const complex aik = a(i, k);
        if (aik == complex{}) continue;
        const complex* brow = &b.entries_[k * n];
        for (std::size_t j = 0; j < n; ++j) out[j] += aik * brow[j];
      }
    }
    return r;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  static std::size_t checked_dim(std::size_t dim) {
    if (dim == 0 || dim > max_matrix_dim) {
      throw size_error("ComplexMatrix: dimension " + std::to_string(dim) + " outside [1, " +
                       std::to_string(max_matrix_dim) + "]");
    }
    return dim;
  }

  void require_same_dim(const ComplexMatrix& o) const {
    if (o.dim_ != dim_) {
      throw contract_error("ComplexMatrix: dimension mismatch " + std::to_string(dim_) + " vs " +
                           std::to_string(o.dim_));
    }
  }

  std::size_t dim_;
  std::vector<complex> entries_;
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

/// max |m(i,j) - conj(m(j,i))|
inline double hermiticity_error(const ComplexMatrix& m) noexcept {
  double e = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j) e = std::max(e, std::abs(m(i, j) - std::conj(m(j, i))));
  return e;
}

/// Tr(a * b^dagger) without forming the product.
inline complex trace_of_product_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw contract_error("trace_of_product_adjoint: dimension mismatch");
  complex t = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) t += ea[k] * std::conj(eb[k]);
  return t;
}

/// Kronecker product: entry (i*b.dim + k, j*b.dim + l) = a(i,j) * b(k,l).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (na * nb > max_matrix_dim) {
    throw size_error("kron: result dimension " + std::to_string(na * nb) + " exceeds " +
                     std::to_string(max_matrix_dim));
  }
  ComplexMatrix r(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const complex aij = a(i, j);
      if (aij == complex{}) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return r;
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues in descending order.
/// Column k of `vectors` is the eigenvector for `values[k]`.
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;
  int sweeps = 0;
};

inline constexpr double jacobi_off_tolerance = 1e-14;
inline constexpr int jacobi_max_sweeps = 100;

/// Cyclic Jacobi diagonalisation. Each rotation zeroes one off-diagonal pair
/// (p, q) with the unitary [[c, s e^{i phi}], [-s e^{-i phi}, c]].
inline HermitianEigen eig_hermitian(const ComplexMatrix& m) {
  if (hermiticity_error(m) > 1e-10) throw contract_error("eig_hermitian: matrix is not Hermitian");
  const std::size_t n = m.dim();

  // Work on the exactly Hermitian part.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = jacobi_off_tolerance * std::max(1.0, a.frobenius_norm());
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > threshold) {
    if (++sweep > jacobi_max_sweeps) {
      throw numeric_error("eig_hermitian: no convergence after " + std::to_string(jacobi_max_sweeps) +
                          " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const complex s_up = s * phase;             // R(p,q)
        const complex s_dn = -s * std::conj(phase);  // R(q,p)

        for (std::size_t k = 0; k < n; ++k) {  // a <- a R
          const complex akp = a(k, p);
          const complex akq = a(k, q);
          a(k, p) = c * akp + s_dn * akq;
          a(k, q) = s_up * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // a <- R^dagger a
          const complex apk = a(p, k);
          const complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(s_dn) * aqk;
          a(q, k) = std::conj(s_up) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {  // v <- v R
          const complex vkp = v(k, p);
          const complex vkq = v(k, q);
          v(k, p) = c * vkp + s_dn * vkq;
          v(k, q) = s_up * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

  HermitianEigen result{std::vector<double>(n), ComplexMatrix(n), sweep};
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) result.vectors(i, k) = v(i, order[k]);
  }
  return result;
}

inline constexpr std::size_t expm_max_dim = 1024;
inline constexpr int expm_taylor_degree = 16;
inline constexpr double expm_max_norm = 1e4;

/// exp(m * t) by scaling and squaring: the scaled argument has 1-norm <= 0.5
/// and is summed with a degree-16 Taylor polynomial.
inline ComplexMatrix expm(const ComplexMatrix& m, double t) {
  if (m.dim() > expm_max_dim) {
    throw size_error("expm: dimension " + std::to_string(m.dim()) + " exceeds " +
                     std::to_string(expm_max_dim));
  }
  const double norm = m.one_norm() * std::abs(t);
  if (!std::isfinite(norm) || norm > expm_max_norm) {
    throw numeric_error("expm: ||m t|| = " + std::to_string(norm) + " is too large");
  }
  int squarings = 0;
  double scaled = norm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++squarings;
  }
  const ComplexMatrix x = m * complex(std::ldexp(t, -squarings));

  ComplexMatrix result = ComplexMatrix::identity(m.dim());
  ComplexMatrix term = result;
  for (int k = 1; k <= expm_taylor_degree; ++k) {
    term = term * x;
    term *= 1.0 / k;
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityOperator {
 public:
  static constexpr double hermiticity_tolerance = 1e-12;
  static constexpr double trace_tolerance = 1e-12;
  static constexpr double positivity_tolerance = 1e-10;

  explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {
    if (hermiticity_error(matrix_) > hermiticity_tolerance)
      throw contract_error("DensityOperator: matrix is not Hermitian");
    const complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > trace_tolerance)
      throw contract_error("DensityOperator: trace " + std::to_string(tr.real()) + " is not 1");
    if (!positive_semidefinite(matrix_, positivity_tolerance))
      throw contract_error("DensityOperator: matrix has an eigenvalue below -1e-10");
  }

  std::size_t dim() const noexcept { return matrix_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const complex& operator()(std::size_t i, std::size_t j) const noexcept { return matrix_(i, j); }

 private:
  // Cholesky of m + tol*I succeeds exactly when no eigenvalue is below -tol
  // (up to rounding).
  static bool positive_semidefinite(const ComplexMatrix& m, double tol) {
    const std::size_t n = m.dim();
    ComplexMatrix l(n);
    for (std::size_t j = 0; j < n; ++j) {
      double d = m(j, j).real() + tol;
      for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
      if (!(d > 0.0)) return false;
      const double ljj = std::sqrt(d);
      l(j, j) = ljj;
      for (std::size_t i = j + 1; i < n; ++i) {
        complex s = m(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
        l(i, j) = s / ljj;
      }
    }
    return true;
  }

  ComplexMatrix matrix_;
};

inline DensityOperator kron(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator(kron(a.matrix(), b.matrix()));
}

}  // namespace adcmem
