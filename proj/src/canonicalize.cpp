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

#include "bellsep/canonicalize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bellsep/error.hpp"
#include "bellsep/tolerances.hpp"

namespace bellsep {

namespace {

double norm3(const Vector3& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

void negate_column(RealMatrix3& m, std::size_t c) {
  for (std::size_t r = 0; r < 3; ++r) m(r, c) = -m(r, c);
}

ComplexMatrix conjugate(const ComplexMatrix& m, const ComplexMatrix& u) {
  return u * m * u.adjoint();
}

}  // namespace

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix g = u.adjoint() * u - ComplexMatrix::identity(u.cols());
  double worst = 0.0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) worst = std::max(worst, std::abs(g(i, j)));
  return worst;
}

double orthogonality_defect(const RealMatrix3& r) {
  const RealMatrix3 g = r.transpose() * r - RealMatrix3::identity();
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) worst = std::max(worst, std::abs(g(i, j)));
  return worst;
}

ComplexMatrix so3_to_su2(const RealMatrix3& r) {
  if (!r.finite()) throw Error(ErrorKind::kInvalidArgument, "rotation has a non-finite entry");
  const double defect = orthogonality_defect(r);
  const double det = r.determinant();
  if (defect > tol::kRotation || std::abs(det - 1.0) > tol::kRotation) {
    std::ostringstream msg;
    msg << "not a proper rotation (orthogonality defect " << defect
        << ", determinant " << det << ")";
    throw Error(ErrorKind::kInvalidArgument, msg.str());
  }

  // q = (w, x, y, z) with u = w I - i (x sigma_1 + y sigma_2 + z sigma_3).
  std::array<double, 4> q{};
  const double tr = r(0, 0) + r(1, 1) + r(2, 2);
  if (tr >= r(0, 0) && tr >= r(1, 1) && tr >= r(2, 2)) {
    const double w = 0.5 * std::sqrt(std::max(0.0, 1.0 + tr));
    q = {w, (r(2, 1) - r(1, 2)) / (4.0 * w), (r(0, 2) - r(2, 0)) / (4.0 * w),
         (r(1, 0) - r(0, 1)) / (4.0 * w)};
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const double x = 0.5 * std::sqrt(std::max(0.0, 1.0 + r(0, 0) - r(1, 1) - r(2, 2)));
    q = {(r(2, 1) - r(1, 2)) / (4.0 * x), x, (r(0, 1) + r(1, 0)) / (4.0 * x),
         (r(0, 2) + r(2, 0)) / (4.0 * x)};
  } else if (r(1, 1) >= r(2, 2)) {
    const double y = 0.5 * std::sqrt(std::max(0.0, 1.0 - r(0, 0) + r(1, 1) - r(2, 2)));
    q = {(r(0, 2) - r(2, 0)) / (4.0 * y), (r(0, 1) + r(1, 0)) / (4.0 * y), y,
         (r(1, 2) + r(2, 1)) / (4.0 * y)};
  } else {
    const double z = 0.5 * std::sqrt(std::max(0.0, 1.0 - r(0, 0) - r(1, 1) + r(2, 2)));
    q = {(r(1, 0) - r(0, 1)) / (4.0 * z), (r(0, 2) + r(2, 0)) / (4.0 * z),
         (r(1, 2) + r(2, 1)) / (4.0 * z), z};
  }

  const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  std::size_t big = 0;
  for (std::size_t k = 1; k < 4; ++k)
    if (std::abs(q[k]) > std::abs(q[big])) big = k;
  const double scale = (q[big] < 0.0 ? -1.0 : 1.0) / n;
  for (double& c : q) c *= scale;

  const Complex i{0.0, 1.0};
  return q[0] * pauli(0) - i * (q[1] * pauli(1) + q[2] * pauli(2) + q[3] * pauli(3));
}

RealMatrix3 su2_to_so3(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2)
    throw Error(ErrorKind::kDimension, "su2_to_so3 expects a 2x2 matrix");
  RealMatrix3 r;
  for (int i = 0; i < 3; ++i) {
    const ComplexMatrix image = conjugate(pauli(i + 1), u);
    for (int j = 0; j < 3; ++j) r(j, i) = 0.5 * (pauli(j + 1) * image).trace().real();
  }
  return r;
}

CanonicalForm canonical_form(const DensityMatrix& rho) {
  const CorrelationData corr = hs_decompose(rho);
  const double nr = norm3(corr.r);
  const double ns = norm3(corr.s);
  if (nr > tol::kBlochZero || ns > tol::kBlochZero) {
    std::ostringstream msg;
    msg << "local Bloch vectors must vanish (|r| = " << nr << ", |s| = " << ns
        << "); only Bell-diagonal-equivalent states are supported";
    throw Error(ErrorKind::kOutOfRegime, msg.str());
  }

  Svd3 svd = svd3(corr.t);
  TVector t = svd.sigma;
  if (svd.u.determinant() * svd.v.determinant() < 0.0) {
    t[2] = -t[2];
    negate_column(svd.v, 2);
  }
  if (svd.u.determinant() < 0.0) {
    negate_column(svd.u, 2);
    negate_column(svd.v, 2);
  }

  CanonicalForm c;
  c.t = t;
  c.rot_a = svd.u;
  c.rot_b = svd.v;
  // T' = R_a T R_b^T under (u_a x u_b); R_a = rot_a^T diagonalises T.
  c.u_a = so3_to_su2(svd.u.transpose());
  c.u_b = so3_to_su2(svd.v.transpose());
  return c;
}

Verdict classify_general(const DensityMatrix& rho) {
  return classify(canonical_form(rho).t);
}

Decomposition to_source_frame(const Decomposition& d, const CanonicalForm& c) {
  Decomposition out;
  out.terms.reserve(d.terms.size());
  const ComplexMatrix ua_dag = c.u_a.adjoint();
  const ComplexMatrix ub_dag = c.u_b.adjoint();
  for (const ProductTerm& term : d.terms) {
    out.terms.push_back({term.weight, QubitState(conjugate(term.a.matrix(), ua_dag)),
                         QubitState(conjugate(term.b.matrix(), ub_dag))});
  }
  return out;
}

}  // namespace bellsep
