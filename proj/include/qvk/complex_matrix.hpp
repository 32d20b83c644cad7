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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qvk/errors.hpp"

namespace qvk {

using Complex = std::complex<double>;

// Centralized tolerances for the whole kernel.
inline constexpr double kHermTol = 1e-10;   // Hermiticity acceptance
inline constexpr double kReconTol = 1e-9;   // eig/svd reconstruction
inline constexpr double kZeroTol = 1e-12;   // singular-value clamp, norms

class CVector;

/// Dense row-major complex matrix. The workhorse for every operator in
/// the toolkit; dimensions stay at or below 16.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t rows, std::size_t cols);
  /// 2x2 matrix from row-major entries.
  static CMatrix mat2(Complex a, Complex b, Complex c, Complex d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conjugate() const;
  Complex trace() const;
  Complex determinant() const;  // square only, LU with partial pivoting

  double max_abs() const;          // entrywise max modulus
  double frobenius_norm() const;

  bool is_hermitian(double tol = kHermTol) const;
  bool is_unitary(double tol = 1e-9) const;

  CVector column(std::size_t j) const;
  void set_column(std::size_t j, const CVector& v);
  CVector apply(const CVector& v) const;  // matrix-vector product

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(Complex scale);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Dense complex vector; quantum states additionally carry unit norm,
/// which callers enforce where required.
class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t dim) : data_(dim) {}
  explicit CVector(std::vector<Complex> data) : data_(std::move(data)) {}

  static CVector basis(std::size_t dim, std::size_t j);

  std::size_t dim() const { return data_.size(); }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  const std::vector<Complex>& data() const { return data_; }

  double norm() const;
  CVector normalized() const;  // throws DegenerateSeed on ~zero input
  CVector conjugate() const;

  CVector& operator+=(const CVector& other);
  CVector& operator-=(const CVector& other);
  CVector& operator*=(Complex scale);
  friend CVector operator+(CVector a, const CVector& b) { return a += b; }
  friend CVector operator-(CVector a, const CVector& b) { return a -= b; }
  friend CVector operator*(Complex s, CVector a) { return a *= s; }

 private:
  std::vector<Complex> data_;
};

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const CVector& a, const CVector& b);
/// |a><b|
CMatrix outer(const CVector& a, const CVector& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

/// Pauli matrices; k = 0 is the identity.
CMatrix pauli(int k);

struct EigResult {
  std::vector<double> values;  // descending
  CMatrix vectors;             // orthonormal columns, values[i] <-> column i
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
/// Throws NotHermitian if the input fails the symmetry tolerance and
/// NoConvergence past the sweep budget.
EigResult hermitian_eig(const CMatrix& h);

struct SvdResult {
  CMatrix u;                    // rows x k, orthonormal columns
  std::vector<double> values;   // k = min(rows, cols), nonincreasing
  CMatrix v;                    // cols x k, orthonormal columns
};

/// Thin SVD via the Hermitian eigendecomposition of the Gram matrix.
/// Singular values below kZeroTol * max are clamped to zero.
SvdResult svd(const CMatrix& m);

/// Count of singular values above rel_tol * largest. Zero matrix has rank 0.
int numerical_rank(const CMatrix& m, double rel_tol = 1e-9);

/// exp(-i h) for Hermitian h.
CMatrix hermitian_exp_minus_i(const CMatrix& h);

}  // namespace qvk
