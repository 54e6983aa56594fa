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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "bellsep/error.hpp"
#include "bellsep/linalg.hpp"
#include "bellsep/qstate.hpp"
#include "oracles.hpp"

namespace bellsep {
namespace {

ComplexMatrix sx() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix sz() { return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
            ComplexMatrix::identity(4));
}

TEST(Kron, DiagonalPaulis) {
  EXPECT_EQ(kron(sz(), sz()), ComplexMatrix::diagonal({1.0, -1.0, -1.0, 1.0}));
}

TEST(Kron, XTimesXIsAntiDiagonal) {
  ComplexMatrix expected(4, 4);
  for (std::size_t i = 0; i < 4; ++i) expected(i, 3 - i) = 1.0;
  EXPECT_EQ(kron(sx(), sx()), expected);
}

TEST(Kron, BlockStructure) {
  const ComplexMatrix a(2, 2, {1.0, {0.0, 2.0}, -3.0, 4.5});
  const ComplexMatrix b(2, 2, {{1.0, 1.0}, 2.0, 0.5, {0.0, -1.0}});
  const ComplexMatrix k = kron(a, b);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
          EXPECT_EQ(k(2 * i + r, 2 * j + c), a(i, j) * b(r, c));
}

TEST(Kron, RejectsNon2x2) {
  EXPECT_THROW(kron(ComplexMatrix::identity(3), ComplexMatrix::identity(2)), Error);
}

TEST(Kron, Bilinear) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    ComplexMatrix a(2, 2), b(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a(i, j) = {u(gen), u(gen)};
        b(i, j) = {u(gen), u(gen)};
      }
    const Complex alpha{u(gen), u(gen)};
    EXPECT_LE(oracle::max_abs(kron(alpha * a, b), alpha * kron(a, b)), 1e-14);
  }
}

TEST(Frobenius, Examples) {
  const ComplexMatrix m(2, 2, {1.0, 2.0, {0.0, 3.0}, 4.0});
  EXPECT_EQ(frobenius_distance(m, m), 0.0);
  EXPECT_DOUBLE_EQ(frobenius_distance(ComplexMatrix::identity(2), ComplexMatrix::zero(2)),
                   std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(frobenius_distance(ComplexMatrix::diagonal({1.0, 0.0}),
                                      ComplexMatrix::diagonal({0.0, 1.0})),
                   std::sqrt(2.0));
  EXPECT_THROW(frobenius_distance(ComplexMatrix::identity(2), ComplexMatrix::identity(4)), Error);
}

TEST(ComplexMatrix, RejectsBadDimensions) {
  EXPECT_THROW(ComplexMatrix(5, 5), Error);
  EXPECT_THROW(ComplexMatrix(1, 2), Error);
  EXPECT_THROW(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), Error);
}

TEST(HermitianEigenvalues, Diagonal) {
  const auto ev = hermitian_eigenvalues(ComplexMatrix::diagonal({3.0, 1.0, 4.0, 2.0}));
  EXPECT_EQ(ev, (std::vector<double>{1.0, 2.0, 3.0, 4.0}));
}

TEST(HermitianEigenvalues, Zero) {
  EXPECT_EQ(hermitian_eigenvalues(ComplexMatrix::zero(4)), (std::vector<double>(4, 0.0)));
}

TEST(HermitianEigenvalues, SingletPartialTranspose) {
  // 4 rho^PT at t = (-1, -1, -1); eigenvalues 1 + t1 + t2 + t3 = -2 and 2 (x3).
  const ComplexMatrix four_pt = oracle::to_matrix(oracle::four_rho_pt(-1, -1, -1), 1.0);
  const auto ev = hermitian_eigenvalues(four_pt);
  ASSERT_EQ(ev.size(), 4u);
  EXPECT_NEAR(ev[0], -2.0, 1e-12);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(ev[k], 2.0, 1e-12);
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m(0, 1) = 1e-6;
  try {
    hermitian_eigenvalues(m);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotHermitian);
  }
}

TEST(HermitianEigenvalues, AcceptsTinyHermiticityNoise) {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m(0, 1) = 1e-11;
  EXPECT_NO_THROW(hermitian_eigenvalues(m));
}

// Oracle: H = U diag(lambda) U^dagger with a Gram-Schmidt unitary U.
TEST(HermitianEigenvalues, RecoversPlantedSpectrum) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 500; ++trial) {
      const ComplexMatrix q = oracle::random_unitary(n, gen);
      std::vector<double> lambda(n);
      for (double& l : lambda) l = u(gen);
      if (trial % 5 == 0) lambda[1] = lambda[0];  // degenerate pair
      ComplexMatrix d(n, n);
      for (std::size_t k = 0; k < n; ++k) d(k, k) = lambda[k];
      const ComplexMatrix h = q * d * q.adjoint();
      std::sort(lambda.begin(), lambda.end());

      const EigenSystem es = hermitian_eigensystem(h);
      for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(es.values[k], lambda[k], 1e-12);

      const double tr = h.trace().real();
      EXPECT_NEAR(std::accumulate(es.values.begin(), es.values.end(), 0.0), tr, 1e-10);

      // H v = lambda v column by column.
      const ComplexMatrix hv = h * es.vectors;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r)
          EXPECT_NEAR(std::abs(hv(r, k) - es.values[k] * es.vectors(r, k)), 0.0, 1e-12);
    }
  }
}

TEST(Svd3, Identity) {
  const Svd3 s = svd3(RealMatrix3::identity());
  EXPECT_EQ(s.sigma, (std::array<double, 3>{1.0, 1.0, 1.0}));
  const RealMatrix3 recon = s.u * RealMatrix3::diagonal(1.0, 1.0, 1.0) * s.v.transpose();
  EXPECT_LE(frobenius_norm(recon - RealMatrix3::identity()), 1e-14);
}

TEST(Svd3, SignedDiagonal) {
  const RealMatrix3 m = RealMatrix3::diagonal(3.0, -2.0, 1.0);
  const Svd3 s = svd3(m);
  EXPECT_NEAR(s.sigma[0], 3.0, 1e-14);
  EXPECT_NEAR(s.sigma[1], 2.0, 1e-14);
  EXPECT_NEAR(s.sigma[2], 1.0, 1e-14);
  const RealMatrix3 recon =
      s.u * RealMatrix3::diagonal(s.sigma[0], s.sigma[1], s.sigma[2]) * s.v.transpose();
  EXPECT_LE(frobenius_norm(recon - m), 1e-14);
}

TEST(Svd3, RankDeficient) {
  for (const RealMatrix3& m :
       {RealMatrix3(), RealMatrix3({1, 2, 3, 2, 4, 6, -1, -2, -3}),
        RealMatrix3({1, 0, 0, 0, 1, 0, 0, 0, 0})}) {
    const Svd3 s = svd3(m);
    const RealMatrix3 recon =
        s.u * RealMatrix3::diagonal(s.sigma[0], s.sigma[1], s.sigma[2]) * s.v.transpose();
    EXPECT_LE(frobenius_norm(recon - m), 1e-12);
    EXPECT_LE(frobenius_norm(s.u.transpose() * s.u - RealMatrix3::identity()), 1e-12);
    EXPECT_LE(frobenius_norm(s.v.transpose() * s.v - RealMatrix3::identity()), 1e-12);
  }
}

TEST(Svd3, RejectsNonFinite) {
  RealMatrix3 m = RealMatrix3::identity();
  m(1, 2) = std::nan("");
  EXPECT_THROW(svd3(m), Error);
}

// 10^4 random matrices with entries in [-1, 1]: reconstruction, orthogonality,
// ordering, and singular values against the characteristic cubic of m^T m.
TEST(Svd3, RandomProperty) {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_recon = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::array<double, 9> e{};
    for (double& x : e) x = u(gen);
    const RealMatrix3 m(e);
    const Svd3 s = svd3(m);

    const RealMatrix3 recon =
        s.u * RealMatrix3::diagonal(s.sigma[0], s.sigma[1], s.sigma[2]) * s.v.transpose();
    worst_recon = std::max(worst_recon, frobenius_norm(recon - m));
    ASSERT_LE(frobenius_norm(s.u.transpose() * s.u - RealMatrix3::identity()), 1e-10);
    ASSERT_LE(frobenius_norm(s.v.transpose() * s.v - RealMatrix3::identity()), 1e-10);
    ASSERT_GE(s.sigma[0], s.sigma[1]);
    ASSERT_GE(s.sigma[1], s.sigma[2]);
    ASSERT_GE(s.sigma[2], 0.0);

    std::array<std::array<double, 3>, 3> gram{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) gram[i][j] += m(k, i) * m(k, j);
    const auto ev = oracle::symmetric3_eigenvalues(gram);
    for (int k = 0; k < 3; ++k)
      ASSERT_NEAR(s.sigma[k] * s.sigma[k], std::max(0.0, ev[2 - k]), 1e-9);
  }
  EXPECT_LE(worst_recon, 1e-10);
}

}  // namespace
}  // namespace bellsep
