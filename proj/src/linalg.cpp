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

#include "bellsep/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "bellsep/error.hpp"
#include "bellsep/tolerances.hpp"

namespace bellsep {

namespace {

bool valid_dim(std::size_t n) { return n >= 2 && n <= 4; }

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << a.rows() << "x" << a.cols()
        << " vs " << b.rows() << "x" << b.cols() << ")";
    throw Error(ErrorKind::kDimension, msg.str());
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

void set_column(RealMatrix3& m, std::size_t c, const Vec3& v) {
  for (std::size_t r = 0; r < 3; ++r) m(r, c) = v[r];
}

Vec3 times(const RealMatrix3& m, const Vec3& v) {
  Vec3 out{};
  for (std::size_t r = 0; r < 3; ++r)
    out[r] = m(r, 0) * v[0] + m(r, 1) * v[1] + m(r, 2) * v[2];
  return out;
}

// Unit vector orthogonal to u (assumed unit length).
Vec3 any_perpendicular(const Vec3& u) {
  std::size_t weakest = 0;
  for (std::size_t k = 1; k < 3; ++k)
    if (std::abs(u[k]) < std::abs(u[weakest])) weakest = k;
  Vec3 axis{};
  axis[weakest] = 1.0;
  Vec3 w = cross(u, axis);
  const double n = std::sqrt(dot(w, w));
  return {w[0] / n, w[1] / n, w[2] / n};
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimension: return "dimension";
    case ErrorKind::kNotHermitian: return "not-hermitian";
    case ErrorKind::kNoConvergence: return "no-convergence";
    case ErrorKind::kNonFinite: return "non-finite";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kInvalidState: return "invalid-state";
    case ErrorKind::kNotSeparable: return "not-separable";
    case ErrorKind::kOutOfRegime: return "out-of-regime";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  if (!valid_dim(rows) || !valid_dim(cols)) {
    std::ostringstream msg;
    msg << "matrix dimensions must lie in {2,3,4}, got " << rows << "x" << cols;
    throw Error(ErrorKind::kDimension, msg.str());
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<Complex> row_major)
    : ComplexMatrix(rows, cols) {
  if (row_major.size() != rows * cols) {
    std::ostringstream msg;
    msg << "expected " << rows * cols << " entries, got " << row_major.size();
    throw Error(ErrorKind::kDimension, msg.str());
  }
  std::copy(row_major.begin(), row_major.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  std::size_t i = 0;
  for (const Complex& d : diag) {
    m(i, i) = d;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
  return acc;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < rows_ * cols_; ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < rows_ * cols_; ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (std::size_t k = 0; k < rows_ * cols_; ++k) data_[k] *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "operator*: inner dimensions differ (" << a.cols() << " vs "
        << b.rows() << ")";
    throw Error(ErrorKind::kDimension, msg.str());
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

// ---------------------------------------------------------------------------
// RealMatrix3

RealMatrix3::RealMatrix3(const std::array<double, 9>& row_major) : data_(row_major) {}

RealMatrix3 RealMatrix3::identity() { return diagonal(1.0, 1.0, 1.0); }

RealMatrix3 RealMatrix3::diagonal(double d0, double d1, double d2) {
  RealMatrix3 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  return m;
}

RealMatrix3 RealMatrix3::transpose() const {
  RealMatrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(j, i) = (*this)(i, j);
  return out;
}

double RealMatrix3::determinant() const {
  const auto& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

bool RealMatrix3::finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double x) { return std::isfinite(x); });
}

RealMatrix3 operator*(const RealMatrix3& a, const RealMatrix3& b) {
  RealMatrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return out;
}

RealMatrix3 operator-(const RealMatrix3& a, const RealMatrix3& b) {
  RealMatrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

double frobenius_norm(const RealMatrix3& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) acc += m(i, j) * m(i, j);
  return std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// Free functions

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2)
    throw Error(ErrorKind::kDimension, "kron: both factors must be 2x2");
  ComplexMatrix out(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) acc += std::norm(m(i, j));
  return std::sqrt(acc);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  return frobenius_norm(a - b);
}

double hermiticity_defect(const ComplexMatrix& h) {
  if (!h.square()) throw Error(ErrorKind::kDimension, "matrix is not square");
  double worst = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i; j < h.cols(); ++j)
      worst = std::max(worst, std::abs(h(i, j) - std::conj(h(j, i))));
  return worst;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& h) {
  const double defect = hermiticity_defect(h);
  if (!(defect <= tol::kHermiticity)) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (max |h - h^dagger| = " << defect << ")";
    throw Error(ErrorKind::kNotHermitian, msg.str());
  }

  const std::size_t n = h.rows();
  ComplexMatrix a = 0.5 * (h + h.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = frobenius_norm(a);
  const double target = tol::kJacobi * scale;

  bool converged = false;
  for (int sweep = 0; sweep <= tol::kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    if (sweep == tol::kJacobiMaxSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        const Complex phase = g / mag;

        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // J = diag(.., 1, .., conj(phase), ..) * Givens(c, s)
        ComplexMatrix j = ComplexMatrix::identity(n);
        j(p, p) = c;
        j(p, q) = s;
        j(q, p) = -s * std::conj(phase);
        j(q, q) = c * std::conj(phase);

        a = j.adjoint() * a * j;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) a(k, k) = a(k, k).real();
        v = v * j;
      }
    }
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "Jacobi did not converge within " << tol::kJacobiMaxSweeps
        << " sweeps (off-diagonal norm " << off_diagonal_norm(a) << ")";
    throw Error(ErrorKind::kNoConvergence, msg.str());
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eigensystem(h).values;
}

Svd3 svd3(const RealMatrix3& m) {
  if (!m.finite()) throw Error(ErrorKind::kNonFinite, "svd3: non-finite entry");

  const RealMatrix3 gram = m.transpose() * m;
  ComplexMatrix gram_c(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) gram_c(i, j) = gram(i, j);
  // The Gram matrix is real symmetric; every Jacobi phase is then +-1 and the
  // eigenvectors stay real.
  const EigenSystem eig = hermitian_eigensystem(gram_c);

  std::array<Vec3, 3> vcols{};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t r = 0; r < 3; ++r) vcols[k][r] = eig.vectors(r, 2 - k).real();

  std::array<Vec3, 3> ucols{};
  std::array<double, 3> sigma{};
  for (std::size_t k = 0; k < 2; ++k) {
    Vec3 w = times(m, vcols[k]);
    for (std::size_t j = 0; j < k; ++j) {
      const double proj = dot(ucols[j], w);
      for (std::size_t r = 0; r < 3; ++r) w[r] -= proj * ucols[j][r];
    }
    const double len = std::sqrt(dot(w, w));
    sigma[k] = len;
    if (len > 0.0) {
      ucols[k] = {w[0] / len, w[1] / len, w[2] / len};
    } else if (k == 0) {
      ucols[k] = {1.0, 0.0, 0.0};
    } else {
      ucols[k] = any_perpendicular(ucols[0]);
    }
  }
  ucols[2] = cross(ucols[0], ucols[1]);
  sigma[2] = dot(ucols[2], times(m, vcols[2]));
  if (sigma[2] < 0.0) {
    sigma[2] = -sigma[2];
    for (double& x : ucols[2]) x = -x;
  }

  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  Svd3 out;
  for (std::size_t k = 0; k < 3; ++k) {
    out.sigma[k] = sigma[order[k]];
    set_column(out.u, k, ucols[order[k]]);
    set_column(out.v, k, vcols[order[k]]);
  }
  return out;
}

}  // namespace bellsep
