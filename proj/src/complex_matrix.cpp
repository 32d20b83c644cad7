// Copyright 2026 The qvk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qvk/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace qvk {

namespace {
constexpr int kJacobiSweepBudget = 100;
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionMismatch("matrix data length does not match rows*cols");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::zero(std::size_t rows, std::size_t cols) {
  return CMatrix(rows, cols);
}

CMatrix CMatrix::mat2(Complex a, Complex b, Complex c, Complex d) {
  return CMatrix(2, 2, {a, b, c, d});
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

CMatrix CMatrix::conjugate() const {
  CMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Complex CMatrix::determinant() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant needs square input");
  CMatrix a = *this;
  const std::size_t n = rows_;
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
    if (std::abs(a(pivot, k)) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool CMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol)
        return false;
  return true;
}

bool CMatrix::is_unitary(double tol) const {
  if (rows_ != cols_) return false;
  const CMatrix g = adjoint() * (*this);
  return (g - identity(rows_)).max_abs() <= tol;
}

CVector CMatrix::column(std::size_t j) const {
  CVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void CMatrix::set_column(std::size_t j, const CVector& v) {
  if (v.dim() != rows_) throw DimensionMismatch("set_column size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

CVector CMatrix::apply(const CVector& v) const {
  if (v.dim() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  CVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix addition shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("matrix subtraction shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix product shape mismatch");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CVector CVector::basis(std::size_t dim, std::size_t j) {
  CVector v(dim);
  v[j] = 1.0;
  return v;
}

double CVector::norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

CVector CVector::normalized() const {
  const double n = norm();
  if (n < kZeroTol) throw DegenerateSeed("cannot normalize a ~zero vector");
  CVector out = *this;
  for (auto& z : out.data_) z /= n;
  return out;
}

CVector CVector::conjugate() const {
  CVector out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

CVector& CVector::operator+=(const CVector& other) {
  if (dim() != other.dim()) throw DimensionMismatch("vector add mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& other) {
  if (dim() != other.dim()) throw DimensionMismatch("vector sub mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CVector& CVector::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

Complex inner(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("inner product mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

CMatrix outer(const CVector& a, const CVector& b) {
  CMatrix out(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      out(i, j) = a[i] * std::conj(b[j]);
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

CMatrix pauli(int k) {
  const Complex i{0.0, 1.0};
  switch (k) {
    case 0:
      return CMatrix::mat2(1, 0, 0, 1);
    case 1:
      return CMatrix::mat2(0, 1, 1, 0);
    case 2:
      return CMatrix::mat2(0, -i, i, 0);
    case 3:
      return CMatrix::mat2(1, 0, 0, -1);
    default:
      throw DimensionMismatch("pauli index must be 0..3");
  }
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One Jacobi rotation annihilating a(p,q); accumulates into v.
void jacobi_rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double beta = std::abs(apq);
  if (beta < 1e-300) {
    a(p, q) = a(q, p) = 0.0;
    return;
  }
  const Complex phase = apq / beta;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * beta);
  // small-magnitude root of t^2 - 2*tau*t - 1 = 0
  double t;
  if (tau >= 0.0) {
    t = -1.0 / (tau + std::sqrt(1.0 + tau * tau));
  } else {
    t = 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  // columns: R[:,p] = (c, s e^{-i phi}), R[:,q] = (-s e^{i phi}, c)
  for (std::size_t i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const Complex aip = a(i, p);
    const Complex aiq = a(i, q);
    a(i, p) = c * aip + s * std::conj(phase) * aiq;
    a(i, q) = -s * phase * aip + c * aiq;
    a(p, i) = std::conj(a(i, p));
    a(q, i) = std::conj(a(i, q));
  }
  a(p, p) = app + beta * t;
  a(q, q) = aqq - beta * t;
  a(p, q) = a(q, p) = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = c * vip + s * std::conj(phase) * viq;
    v(i, q) = -s * phase * vip + c * viq;
  }
}

// Extends the first `have` orthonormal columns of m (rows x k) to `want`.
void complete_orthonormal_columns(CMatrix& m, std::size_t have,
                                  std::size_t want) {
  const std::size_t n = m.rows();
  std::size_t next = have;
  for (std::size_t e = 0; e < n && next < want; ++e) {
    CVector cand = CVector::basis(n, e);
    for (std::size_t c = 0; c < next; ++c) {
      const CVector col = m.column(c);
      const Complex ov = inner(col, cand);
      cand -= ov * col;
    }
    if (cand.norm() > 1e-6) {
      m.set_column(next++, cand.normalized());
    }
  }
  if (next < want)
    throw NoConvergence("failed to complete an orthonormal column set");
}

}  // namespace

EigResult hermitian_eig(const CMatrix& h) {
  if (h.rows() != h.cols())
    throw DimensionMismatch("eigendecomposition needs a square matrix");
  if (!h.is_hermitian(kHermTol))
    throw NotHermitian("matrix is not Hermitian within tolerance");

  const std::size_t n = h.rows();
  CMatrix a = h;
  // symmetrize so the iteration sees an exactly Hermitian matrix
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Complex{a(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  CMatrix v = CMatrix::identity(n);
  const double scale = std::max(a.frobenius_norm(), 1.0);

  bool converged = false;
  for (int sweep = 0; sweep < kJacobiSweepBudget; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-14 * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) > 1e-12 * scale)
    throw NoConvergence("Jacobi sweep budget exhausted");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigResult res;
  res.values.resize(n);
  res.vectors = CMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    res.values[i] = a(order[i], order[i]).real();
    res.vectors.set_column(i, v.column(order[i]));
  }
  return res;
}

SvdResult svd(const CMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  const std::size_t k = std::min(r, c);
  SvdResult res;
  res.values.assign(k, 0.0);

  const bool tall = r >= c;
  // eigendecompose the smaller Gram matrix
  const CMatrix gram = tall ? m.adjoint() * m : m * m.adjoint();
  const EigResult eig = hermitian_eig(gram);

  double smax = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double s = std::sqrt(std::max(eig.values[i], 0.0));
    res.values[i] = s;
    smax = std::max(smax, s);
  }
  for (auto& s : res.values)
    if (s < kZeroTol * smax) s = 0.0;

  res.u = CMatrix(r, k);
  res.v = CMatrix(c, k);
  std::size_t filled = 0;
  if (tall) {
    for (std::size_t i = 0; i < k; ++i) res.v.set_column(i, eig.vectors.column(i));
    for (std::size_t i = 0; i < k; ++i) {
      if (res.values[i] > kZeroTol * std::max(smax, 1.0)) {
        CVector col = m.apply(res.v.column(i));
        col *= Complex{1.0 / res.values[i], 0.0};
        res.u.set_column(i, col);
        filled = i + 1;
      } else {
        break;
      }
    }
    complete_orthonormal_columns(res.u, filled, k);
  } else {
    for (std::size_t i = 0; i < k; ++i) res.u.set_column(i, eig.vectors.column(i));
    for (std::size_t i = 0; i < k; ++i) {
      if (res.values[i] > kZeroTol * std::max(smax, 1.0)) {
        CVector col = m.adjoint().apply(res.u.column(i));
        col *= Complex{1.0 / res.values[i], 0.0};
        res.v.set_column(i, col);
        filled = i + 1;
      } else {
        break;
      }
    }
    complete_orthonormal_columns(res.v, filled, k);
  }
  return res;
}

int numerical_rank(const CMatrix& m, double rel_tol) {
  const SvdResult s = svd(m);
  if (s.values.empty() || s.values[0] <= 0.0) return 0;
  int rank = 0;
  for (double v : s.values)
    if (v > rel_tol * s.values[0]) ++rank;
  return rank;
}

CMatrix hermitian_exp_minus_i(const CMatrix& h) {
  const EigResult eig = hermitian_eig(h);
  const std::size_t n = h.rows();
  CMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex phase = std::exp(Complex{0.0, -eig.values[k]});
    const CVector col = eig.vectors.column(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += phase * col[i] * std::conj(col[j]);
  }
  return out;
}

}  // namespace qvk
