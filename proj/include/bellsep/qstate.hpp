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
#include <optional>
#include <string>

#include "bellsep/linalg.hpp"

namespace bellsep {

using TVector = std::array<double, 3>;
using Vector3 = std::array<double, 3>;

/// Returns a description of the first density-matrix invariant `m` violates
/// (square, Hermitian, unit trace, positive semidefinite), or nullopt.
std::optional<std::string> state_violation(const ComplexMatrix& m);

/// Two-qubit density matrix in the basis |00>, |01>, |10>, |11>. Qubit A is
/// the high-order factor of the row index 2a + b.
class DensityMatrix {
 public:
  /// Throws ErrorKind::kInvalidState naming the violated invariant.
  explicit DensityMatrix(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const noexcept { return m_; }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  ComplexMatrix m_;
};

/// Single-qubit density matrix.
class QubitState {
 public:
  explicit QubitState(const ComplexMatrix& m);

  /// Projector (I + sign * sigma_axis) / 2 onto an eigenstate of a Pauli
  /// matrix; axis in {1, 2, 3}, sign in {-1, +1}.
  static QubitState pauli_eigenstate(int axis, int sign);

  const ComplexMatrix& matrix() const noexcept { return m_; }

  friend bool operator==(const QubitState&, const QubitState&) = default;

 private:
  ComplexMatrix m_;
};

/// Hilbert-Schmidt coefficients: local Bloch vectors r (A) and s (B) and the
/// correlation matrix t(m, n) = Tr(rho sigma_m x sigma_n).
struct CorrelationData {
  Vector3 r{};
  Vector3 s{};
  RealMatrix3 t;
};

/// sigma_0 = I, sigma_1 = x, sigma_2 = y, sigma_3 = z.
ComplexMatrix pauli(int index);

/// Builds (1/4)[I x I + sum_i t_i sigma_i x sigma_i] without validation.
ComplexMatrix bell_diagonal_matrix(const TVector& t);

/// Validated Bell-diagonal state; throws kInvalidState when t lies outside
/// the physical tetrahedron.
DensityMatrix from_t_vector(const TVector& t);
inline DensityMatrix from_t_vector(double t1, double t2, double t3) {
  return from_t_vector(TVector{t1, t2, t3});
}

/// Analytic eigenvalues of bell_diagonal_matrix(t):
/// {(1 + t3 +- (t1 - t2)) / 4, (1 - t3 +- (t1 + t2)) / 4}, ascending.
std::array<double, 4> bell_diagonal_spectrum(const TVector& t);

/// Coefficients of any 4x4 matrix; no range checks on t.
CorrelationData hs_decompose(const ComplexMatrix& m);
inline CorrelationData hs_decompose(const DensityMatrix& rho) {
  return hs_decompose(rho.matrix());
}

/// Inverse of hs_decompose.
ComplexMatrix hs_reconstruct(const CorrelationData& c);

/// Transpose on subsystem B: (2a + b, 2a' + b') -> (2a + b', 2a' + b).
ComplexMatrix partial_transpose(const ComplexMatrix& m);
inline ComplexMatrix partial_transpose(const DensityMatrix& rho) {
  return partial_transpose(rho.matrix());
}

/// Tr(rho^2).
double purity(const ComplexMatrix& m);
inline double purity(const QubitState& s) { return purity(s.matrix()); }
inline double purity(const DensityMatrix& rho) { return purity(rho.matrix()); }

/// (u_a x u_b) m (u_a x u_b)^dagger
ComplexMatrix conjugate_local(const ComplexMatrix& m, const ComplexMatrix& u_a,
                              const ComplexMatrix& u_b);

}  // namespace bellsep
