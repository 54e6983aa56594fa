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

#include "bellsep/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bellsep/error.hpp"
#include "bellsep/tolerances.hpp"

namespace bellsep {

namespace {

const Complex kI{0.0, 1.0};

std::string describe(double value) {
  std::ostringstream out;
  out.precision(17);
  out << value;
  return out.str();
}

}  // namespace

std::optional<std::string> state_violation(const ComplexMatrix& m) {
  if (!m.square()) return "matrix is not square";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return "matrix has a non-finite entry";

  const double defect = hermiticity_defect(m);
  if (defect > tol::kHermiticity)
    return "not Hermitian: max |rho - rho^dagger| = " + describe(defect);

  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > tol::kTrace)
    return "trace is " + describe(tr.real()) +
           (tr.imag() != 0.0 ? " + " + describe(tr.imag()) + "i" : "") +
           ", expected 1";

  const std::vector<double> ev = hermitian_eigenvalues(m);
  if (ev.front() < tol::kPsdSlack)
    return "not positive semidefinite: eigenvalue " + describe(ev.front()) +
           " < " + describe(tol::kPsdSlack);
  return std::nullopt;
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : m_(m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw Error(ErrorKind::kInvalidState, "density matrix must be 4x4");
  if (auto why = state_violation(m))
    throw Error(ErrorKind::kInvalidState, "invalid two-qubit state: " + *why);
}

QubitState::QubitState(const ComplexMatrix& m) : m_(m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw Error(ErrorKind::kInvalidState, "qubit state must be 2x2");
  if (auto why = state_violation(m))
    throw Error(ErrorKind::kInvalidState, "invalid qubit state: " + *why);
}

QubitState QubitState::pauli_eigenstate(int axis, int sign) {
  if (axis < 1 || axis > 3 || (sign != 1 && sign != -1))
    throw Error(ErrorKind::kInvalidArgument, "pauli_eigenstate: bad axis or sign");
  return QubitState(0.5 * (pauli(0) + static_cast<double>(sign) * pauli(axis)));
}

ComplexMatrix pauli(int index) {
  switch (index) {
    case 0: return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, 1.0});
    case 1: return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0});
    case 2: return ComplexMatrix(2, 2, {0.0, -kI, kI, 0.0});
    case 3: return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0});
    default: break;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "pauli index must be 0..3, got " + std::to_string(index));
}

ComplexMatrix bell_diagonal_matrix(const TVector& t) {
  ComplexMatrix m = kron(pauli(0), pauli(0));
  for (int i = 1; i <= 3; ++i) m += t[i - 1] * kron(pauli(i), pauli(i));
  return 0.25 * m;
}

DensityMatrix from_t_vector(const TVector& t) {
  for (double x : t)
    if (!std::isfinite(x))
      throw Error(ErrorKind::kInvalidState, "t vector has a non-finite entry");
  return DensityMatrix(bell_diagonal_matrix(t));
}

std::array<double, 4> bell_diagonal_spectrum(const TVector& t) {
  std::array<double, 4> ev{
      (1.0 + t[2] + (t[0] - t[1])) / 4.0,
      (1.0 + t[2] - (t[0] - t[1])) / 4.0,
      (1.0 - t[2] + (t[0] + t[1])) / 4.0,
      (1.0 - t[2] - (t[0] + t[1])) / 4.0,
  };
  std::sort(ev.begin(), ev.end());
  return ev;
}

CorrelationData hs_decompose(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw Error(ErrorKind::kDimension, "hs_decompose expects a 4x4 matrix");
  CorrelationData c;
  for (int a = 0; a < 3; ++a) {
    c.r[a] = (m * kron(pauli(a + 1), pauli(0))).trace().real();
    c.s[a] = (m * kron(pauli(0), pauli(a + 1))).trace().real();
    for (int b = 0; b < 3; ++b)
      c.t(a, b) = (m * kron(pauli(a + 1), pauli(b + 1))).trace().real();
  }
  return c;
}

ComplexMatrix hs_reconstruct(const CorrelationData& c) {
  ComplexMatrix m = kron(pauli(0), pauli(0));
  for (int a = 0; a < 3; ++a) {
    m += c.r[a] * kron(pauli(a + 1), pauli(0));
    m += c.s[a] * kron(pauli(0), pauli(a + 1));
    for (int b = 0; b < 3; ++b) m += c.t(a, b) * kron(pauli(a + 1), pauli(b + 1));
  }
  return 0.25 * m;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw Error(ErrorKind::kDimension, "partial_transpose expects a 4x4 matrix");
  ComplexMatrix out(4, 4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t ap = 0; ap < 2; ++ap)
        for (std::size_t bp = 0; bp < 2; ++bp)
          out(2 * a + bp, 2 * ap + b) = m(2 * a + b, 2 * ap + bp);
  return out;
}

double purity(const ComplexMatrix& m) { return (m * m).trace().real(); }

ComplexMatrix conjugate_local(const ComplexMatrix& m, const ComplexMatrix& u_a,
                              const ComplexMatrix& u_b) {
  const ComplexMatrix u = kron(u_a, u_b);
  return u * m * u.adjoint();
}

}  // namespace bellsep
