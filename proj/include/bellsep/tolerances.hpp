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

namespace bellsep::tol {

// Maximum |h_ij - conj(h_ji)| accepted as Hermitian.
inline constexpr double kHermiticity = 1e-9;
// |Tr(rho) - 1| accepted as unit trace.
inline constexpr double kTrace = 1e-9;
// Smallest eigenvalue accepted as positive semidefinite.
inline constexpr double kPsdSlack = -1e-9;
// Purity at or above 1 - kPurity counts as a pure state.
inline constexpr double kPurity = 1e-9;
// Reconstruction residuals (Hilbert-Schmidt round trips, SVD, rotations).
inline constexpr double kReconstruction = 1e-10;
// Sum |t_i| <= 1 + kBoundary is classified separable.
inline constexpr double kBoundary = 1e-12;
// Local Bloch vectors with norm at or below this count as zero.
inline constexpr double kBlochZero = 1e-9;
// Orthogonality / determinant slack for proper rotations.
inline constexpr double kRotation = 1e-10;
// Residual above which a supplied decomposition fails verification.
inline constexpr double kVerify = 1e-9;

// Jacobi stops once the off-diagonal Frobenius norm drops to
// kJacobi * ||A||_F.
inline constexpr double kJacobi = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

}  // namespace bellsep::tol
