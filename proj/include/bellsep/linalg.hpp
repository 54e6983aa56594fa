// Copyright 2026 The bellsep Authors
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

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace bellsep {

using Complex = std::complex<double>;

/// Dense complex matrix with 2, 3 or 4 rows and columns, row-major.
///
/// Storage is a fixed 16-slot array so the type is a cheap value; only the
/// first rows*cols slots are meaningful and the rest stay zero.
class ComplexMatrix {
 public:
  ComplexMatrix() : ComplexMatrix(2, 2) {}
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::initializer_list<Complex> row_major);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n, n); }
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::array<Complex, 16> data_{};
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Real 3x3 matrix, row-major.
class RealMatrix3 {
 public:
  RealMatrix3() = default;
  explicit RealMatrix3(const std::array<double, 9>& row_major);

  static RealMatrix3 identity();
  static RealMatrix3 diagonal(double d0, double d1, double d2);

  double& operator()(std::size_t r, std::size_t c) { return data_[r * 3 + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * 3 + c]; }

  RealMatrix3 transpose() const;
  double determinant() const;
  bool finite() const;

  friend bool operator==(const RealMatrix3&, const RealMatrix3&) = default;

 private:
  std::array<double, 9> data_{};
};

RealMatrix3 operator*(const RealMatrix3& a, const RealMatrix3& b);
RealMatrix3 operator-(const RealMatrix3& a, const RealMatrix3& b);
double frobenius_norm(const RealMatrix3& m);

/// Kronecker product of two 2x2 matrices; block (i, j) of the result is a(i, j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& m);

/// Largest |h(i, j) - conj(h(j, i))|.
double hermiticity_defect(const ComplexMatrix& h);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic complex Jacobi on a Hermitian matrix.
///
/// Each rotation first removes the phase of the pivot h(p, q) and then applies
/// a real Givens rotation, so the result is exactly unitary up to rounding.
/// Sweeps stop once the off-diagonal Frobenius norm is at most
/// tol::kJacobi * ||h||_F (1e-14 relative); more than tol::kJacobiMaxSweeps
/// sweeps raises kNoConvergence. Inputs with hermiticity_defect above
/// tol::kHermiticity raise kNotHermitian.
EigenSystem hermitian_eigensystem(const ComplexMatrix& h);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

struct Svd3 {
  RealMatrix3 u;
  std::array<double, 3> sigma;  // descending, nonnegative
  RealMatrix3 v;
};

/// m = u * diag(sigma) * v^T with u, v orthogonal (determinants may be -1).
Svd3 svd3(const RealMatrix3& m);

}  // namespace bellsep
