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

#include "bellsep/sampling.hpp"

#include <cmath>
#include <numbers>

#include "bellsep/canonicalize.hpp"

namespace bellsep {

double Sampler::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Sampler::normal() {
  // 1 - uniform() lies in (0, 1], so the log is finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

TVector Sampler::cube_point() {
  const double a = uniform(-1.0, 1.0);
  const double b = uniform(-1.0, 1.0);
  const double c = uniform(-1.0, 1.0);
  return {a, b, c};
}

TVector Sampler::tetrahedron_point() {
  for (;;) {
    const TVector t = cube_point();
    if (in_tetrahedron(t)) return t;
  }
}

TVector Sampler::octahedron_point() {
  for (;;) {
    const TVector t = cube_point();
    if (std::abs(t[0]) + std::abs(t[1]) + std::abs(t[2]) <= 1.0) return t;
  }
}

ComplexMatrix Sampler::su2() {
  double q[4];
  double n = 0.0;
  do {
    n = 0.0;
    for (double& c : q) {
      c = normal();
      n += c * c;
    }
  } while (n < 1e-24);
  n = std::sqrt(n);
  const Complex i{0.0, 1.0};
  return (q[0] / n) * pauli(0) -
         i * ((q[1] / n) * pauli(1) + (q[2] / n) * pauli(2) + (q[3] / n) * pauli(3));
}

RealMatrix3 Sampler::rotation() { return su2_to_so3(su2()); }

bool in_tetrahedron(const TVector& t, double slack) {
  const auto ev = bell_diagonal_spectrum(t);
  return ev[0] >= -slack;
}

}  // namespace bellsep
