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

#include "bellsep/linalg.hpp"
#include "bellsep/qstate.hpp"
#include "bellsep/separability.hpp"

namespace bellsep {

/// Local-unitary frame in which a state with zero Bloch vectors is
/// Bell-diagonal: rot_a^T * T * rot_b = diag(t), and
/// (u_a x u_b) rho (u_a x u_b)^dagger = from_t_vector(t).
struct CanonicalForm {
  TVector t{};
  RealMatrix3 rot_a;
  RealMatrix3 rot_b;
  ComplexMatrix u_a;
  ComplexMatrix u_b;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Singular-value factorisation of the correlation matrix with both rotations
/// made proper. When det(u) det(v) = -1 the smallest singular value and the
/// matching column of v are negated; a remaining common -1 is removed by
/// negating the same column of both factors.
///
/// Throws kOutOfRegime if either Bloch vector exceeds tol::kBlochZero.
CanonicalForm canonical_form(const DensityMatrix& rho);

/// Double-cover lift: u sigma_i u^dagger = sum_j r(j, i) sigma_j.
///
/// Uses Shepperd's quaternion extraction (pivot on the largest of the trace
/// and the diagonal). The global sign is fixed by making the largest-magnitude
/// quaternion component positive. Throws kInvalidArgument unless r is
/// orthogonal with determinant +1 within tol::kRotation.
ComplexMatrix so3_to_su2(const RealMatrix3& r);

/// Inverse direction: the rotation r with u sigma_i u^dagger = sum_j r(j, i) sigma_j.
RealMatrix3 su2_to_so3(const ComplexMatrix& u);

/// canonical_form followed by classify on the canonical t.
Verdict classify_general(const DensityMatrix& rho);

/// Maps a decomposition of the canonical state back to the source frame by
/// conjugating every factor with u_a^dagger and u_b^dagger.
Decomposition to_source_frame(const Decomposition& d, const CanonicalForm& c);

/// Largest |c^dagger c - I| entry.
double unitarity_defect(const ComplexMatrix& u);
/// Largest |r^T r - I| entry.
double orthogonality_defect(const RealMatrix3& r);

}  // namespace bellsep
