// Copyright 2026 The adcmem Authors
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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "adcmem/channels.hpp"
#include "adcmem/linalg.hpp"
#include "adcmem/oracle.hpp"

using namespace adcmem;

namespace {

ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  // Columns of a random isometry with one block are a unitary.
  return random_kraus_set(dim, 1, rng).groups()[0].operators[0];
}

}  // namespace

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
}

TEST(Kron, DiagonalFactors) {
  const double c = std::cos(std::numbers::pi / 3);
  const auto k = kron(ComplexMatrix::diagonal({c, 1.0}), ComplexMatrix::diagonal({c, 1.0}));
  EXPECT_LT(max_abs_diff(k, ComplexMatrix::diagonal({0.25, 0.5, 0.5, 1.0})), 1e-15);
}

TEST(Kron, FullDampingJumpSquared) {
  const auto a1 = single_use_kraus(half_pi).groups()[0].operators[1];
  const auto k = kron(a1, a1);
  ComplexMatrix expected(4);
  expected(3, 0) = 1.0;
  EXPECT_LT(max_abs_diff(k, expected), 1e-15);
}

TEST(Kron, AssociativeOnIntegers) {
  const ComplexMatrix a{{1.0, 2.0}, {3.0, -1.0}};
  const ComplexMatrix b{{0.0, 5.0}, {-2.0, 4.0}};
  const ComplexMatrix c{{7.0, 1.0}, {1.0, 0.0}};
  EXPECT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
}

TEST(Kron, RejectsOversizedResult) {
  EXPECT_THROW(kron(ComplexMatrix::identity(128), ComplexMatrix::identity(64)), size_error);
}

TEST(Kron, MixedProductRule) {
  std::mt19937_64 rng(7);
  const auto a = random_unitary(2, rng), b = random_unitary(3, rng);
  const auto c = random_unitary(2, rng), d = random_unitary(3, rng);
  EXPECT_LT(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-13);
}

TEST(EigHermitian, Identity) {
  const auto e = eig_hermitian(ComplexMatrix::identity(2));
  ASSERT_EQ(e.values.size(), 2u);
  EXPECT_DOUBLE_EQ(e.values[0], 1.0);
  EXPECT_DOUBLE_EQ(e.values[1], 1.0);
}

TEST(EigHermitian, PauliX) {
  const auto e = eig_hermitian(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
  EXPECT_NEAR(e.values[0], 1.0, 1e-15);
  EXPECT_NEAR(e.values[1], -1.0, 1e-15);
}

TEST(EigHermitian, RecoversConstructedSpectrum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> lambda(8);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (auto& l : lambda) l = u(rng);
    const auto v = random_unitary(8, rng);
    const auto m = v * ComplexMatrix::diagonal(lambda) * v.adjoint();
    const auto e = eig_hermitian(m);
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(e.values[i], lambda[i], 1e-11);
  }
}

TEST(EigHermitian, EigenvectorsReconstructMatrix) {
  std::mt19937_64 rng(3);
  const auto rho = random_density_operator(6, rng);
  const auto e = eig_hermitian(rho.matrix());
  EXPECT_LT(max_abs_diff(e.vectors * ComplexMatrix::diagonal(e.values) * e.vectors.adjoint(), rho.matrix()), 1e-12);
  EXPECT_LT(max_abs_diff(e.vectors.adjoint() * e.vectors, ComplexMatrix::identity(6)), 1e-12);
}

TEST(EigHermitian, DegenerateAndZeroMatrices) {
  EXPECT_EQ(eig_hermitian(ComplexMatrix(3)).values, (std::vector<double>{0.0, 0.0, 0.0}));
  const auto e = eig_hermitian(ComplexMatrix::diagonal({2.0, 2.0, 2.0, 2.0}));
  EXPECT_EQ(e.sweeps, 0);
}

TEST(EigHermitian, RejectsNonHermitian) {
  EXPECT_THROW(eig_hermitian(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}), contract_error);
}

TEST(Expm, ZeroTimeIsIdentity) {
  std::mt19937_64 rng(5);
  const auto m = random_unitary(4, rng);
  EXPECT_LT(max_abs_diff(expm(m, 0.0), ComplexMatrix::identity(4)), 1e-15);
}

TEST(Expm, DiagonalCase) {
  const auto e = expm(ComplexMatrix::diagonal({0.7, -2.5}), 1.0);
  EXPECT_NEAR(e(0, 0).real(), std::exp(0.7), 1e-14);
  EXPECT_NEAR(e(1, 1).real(), std::exp(-2.5), 1e-15);
  EXPECT_EQ(e(0, 1), complex(0.0));
}

TEST(Expm, SingleQubitLiouvillianMatchesKraus) {
  // alpha t = 2 ln 2 gives cos(chi) = 1/2.
  const auto a1 = single_use_kraus(std::numbers::pi / 3).groups()[0].operators[1];
  ComplexMatrix jump(2);
  jump(1, 0) = 1.0;
  const auto prop = expm(vectorized_liouvillian(jump, 1.0), 2.0 * std::log(2.0));
  const auto k = single_use_kraus(std::numbers::pi / 3);
  std::mt19937_64 rng(1);
  const auto rho = random_density_operator(2, rng);
  std::vector<complex> vec(4);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 2; ++i) vec[j * 2 + i] = rho(i, j);
  const auto expected = apply(k, rho);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 2; ++i) {
      complex s = 0.0;
      for (std::size_t c = 0; c < 4; ++c) s += prop(j * 2 + i, c) * vec[c];
      EXPECT_LT(std::abs(s - expected(i, j)), 1e-13);
    }
  EXPECT_NEAR(std::norm(a1(1, 0)), 0.75, 1e-15);
}

TEST(Expm, ExponentialOfAntiHermitianIsUnitary) {
  std::mt19937_64 rng(9);
  const auto h = random_density_operator(5, rng).matrix();
  const auto u = expm(h * complex(0.0, 1.0), 3.0);
  EXPECT_LT(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(5)), 1e-12);
}

TEST(Expm, RejectsHugeNorm) {
  EXPECT_THROW(expm(ComplexMatrix::identity(2), 1e6), numeric_error);
}

TEST(DensityOperator, ValidatesInput) {
  EXPECT_NO_THROW(DensityOperator(ComplexMatrix::diagonal({0.3, 0.7})));
  EXPECT_THROW(DensityOperator(ComplexMatrix::diagonal({0.3, 0.6})), contract_error);
  EXPECT_THROW(DensityOperator(ComplexMatrix::diagonal({1.5, -0.5})), contract_error);
  EXPECT_THROW(DensityOperator(ComplexMatrix{{0.5, 0.1}, {0.0, 0.5}}), contract_error);
}

TEST(DensityOperator, KronIsState) {
  std::mt19937_64 rng(2);
  const auto a = random_density_operator(2, rng), b = random_density_operator(3, rng);
  const auto ab = kron(a, b);
  EXPECT_EQ(ab.dim(), 6u);
  EXPECT_NEAR(ab.matrix().trace().real(), 1.0, 1e-14);
}

TEST(ComplexMatrix, AdjointAndTraceIdentity) {
  std::mt19937_64 rng(4);
  const auto a = random_unitary(3, rng), b = random_unitary(3, rng);
  EXPECT_LT(std::abs(trace_of_product_adjoint(a, b) - (a * b.adjoint()).trace()), 1e-14);
  EXPECT_LT(max_abs_diff((a * b).adjoint(), b.adjoint() * a.adjoint()), 1e-14);
}

TEST(ComplexMatrix, DimensionMismatchThrows) {
  EXPECT_THROW(ComplexMatrix::identity(2) + ComplexMatrix::identity(3), contract_error);
  EXPECT_THROW(ComplexMatrix(0), size_error);
}
