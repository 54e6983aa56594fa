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

#include <cstdint>
#include <random>

#include "bellsep/linalg.hpp"
#include "bellsep/qstate.hpp"

namespace bellsep {

/// Seeded source of random t vectors, rotations and qubit unitaries.
///
/// Built on std::mt19937_64, whose output sequence is fixed by the standard;
/// uniform doubles take the top 53 bits of each draw, and normal deviates
/// come from Box-Muller, so a given seed yields the same stream on every
/// platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

  TVector cube_point();
  /// Rejection sample from [-1, 1]^3 until the Bell-diagonal state is valid.
  TVector tetrahedron_point();
  /// Rejection sample from the tetrahedron until sum |t_i| <= 1.
  TVector octahedron_point();

  /// Haar-random element of SU(2).
  ComplexMatrix su2();
  /// Haar-random proper rotation.
  RealMatrix3 rotation();

 private:
  std::mt19937_64 gen_;
};

/// Analytic membership in the valid tetrahedron, all four eigenvalues of the
/// Bell-diagonal matrix nonnegative up to `slack`.
bool in_tetrahedron(const TVector& t, double slack = 0.0);

}  // namespace bellsep
