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

#include "adcmem/capacity.hpp"
#include "adcmem/oracle.hpp"

using namespace adcmem;
using std::numbers::pi;

TEST(SpectrumOf, IdentityChannel) {
  const auto s = spectrum_via_diagonalization(KrausSet({ComplexMatrix::identity(2)}),
                                              DensityOperator(ComplexMatrix::diagonal({0.3, 0.7})));
  EXPECT_LT(max_spectrum_diff(s, Spectrum::from_values(std::vector<double>{0.7, 0.3})), 1e-15);
}

TEST(SpectrumOf, TwoUseProductInput) {
  const DampingParams d(pi / 4, 0.5);
  const auto s = spectrum_via_diagonalization(two_use_kraus(d), product_state(qubit_state(0.5), 2));
  EXPECT_LT(max_spectrum_diff(s, two_use_output_spectrum(d, 0.5)), 1e-10);
}

TEST(SpectrumOf, PerfectMemoryRandomDiagonalInputs) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u;
  for (int t = 0; t < 3; ++t) {
    const double p = u(rng), chi = half_pi * u(rng);
    const auto s = spectrum_via_diagonalization(n_use_perfect_memory_kraus(4, chi), product_state(qubit_state(p), 4));
    EXPECT_LT(max_spectrum_diff(s, n_use_perfect_memory_spectra(4, chi, p).output), 1e-10);
  }
}

TEST(Purification, PureInputEntropyExchangeEqualsOutputEntropy) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 5; ++t) {
    const auto k = random_kraus_set(3, 3, rng);
    const auto rho = random_density_operator(3, rng, true);
    EXPECT_NEAR(entropy_exchange_via_purification(k, rho), von_neumann_entropy(spectrum_via_diagonalization(k, rho)),
                1e-9);
  }
}

TEST(Purification, NoiselessChannelHasNoExchange) {
  const auto rho = product_state(qubit_state(0.3, 0.2), 2);
  EXPECT_NEAR(entropy_exchange_via_purification(two_use_kraus(DampingParams(0.0, 0.4)), rho), 0.0, 1e-9);
}

TEST(Purification, TwoUseMemoryEqualsComplementaryEnvironment) {
  const auto k = two_use_kraus(DampingParams(0.685, 0.8));
  const auto rho = product_state(qubit_state(0.4154), 2);
  const double s_e = entropy_exchange_via_purification(k, rho);
  EXPECT_NEAR(s_e, von_neumann_entropy(environment_spectrum_via_diagonalization(k, rho, EnvironmentBasis::complementary)),
              1e-9);
}

TEST(Purification, SharedBasisEnvironmentDiffersWhenSectorsMix) {
  // The closed-form environment spectrum is the shared-basis one; with both
  // sectors present it is not the complementary channel.
  const DampingParams d(0.685, 0.8);
  const double s_e = entropy_exchange_via_purification(two_use_kraus(d), product_state(qubit_state(0.4154), 2));
  EXPECT_GT(std::abs(s_e - von_neumann_entropy(two_use_environment_spectrum(d, 0.4154))), 1e-3);
}

TEST(Purification, RejectsLargeSystems) {
  EXPECT_THROW(entropy_exchange_via_purification(n_use_perfect_memory_kraus(7, 0.3), product_state(qubit_state(0.5), 7)),
               size_error);
}

TEST(Lindblad, NoiselessIsExact) {
  const auto r = lindblad_propagator_check(2, 0.0);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.max_abs_error, 0.0);
}

TEST(Lindblad, TwoQubitsHalfCosine) {
  const auto r = lindblad_propagator_check(2, std::acos(0.5));
  EXPECT_TRUE(r.passed) << r.max_abs_error;
  EXPECT_NEAR(std::pow(std::sin(std::acos(0.5)), 2), 0.75, 1e-15);
}

TEST(Lindblad, ThreeQubits) {
  const auto r = lindblad_propagator_check(3, 1.0);
  EXPECT_TRUE(r.passed);
  EXPECT_LE(r.max_abs_error, 1e-8);
}

TEST(Lindblad, RejectsFullDamping) { EXPECT_THROW(lindblad_propagator_check(2, half_pi), domain_error); }

TEST(GridSearch, Noiseless) {
  const auto r = grid_search_capacity(DampingParams(0.0, 0.3), 1001);
  EXPECT_NEAR(r.p_star, 0.5, 1.0 / 1001);
  EXPECT_NEAR(r.q_value, 2.0, 1e-12);
}

TEST(GridSearch, AgreesWithOptimizer) {
  for (double chi : {0.3, 0.9})
    for (double mu : {0.2, 0.7}) {
      const DampingParams d(chi, mu);
      EXPECT_LE(std::abs(grid_search_capacity(d, 20000).p_star - capacity_two_use(d).p_star), 2.0 / 20000);
    }
  EXPECT_THROW(grid_search_capacity(DampingParams(0.1, 0.1), 50), contract_error);
}

TEST(RandomObjects, AreValid) {
  std::mt19937_64 rng(1);
  const auto k = random_kraus_set(4, 3, rng);
  EXPECT_LE(k.completeness_error(), 1e-12);
  const auto rho = random_density_operator(4, rng, true);
  EXPECT_NEAR((rho.matrix() * rho.matrix()).trace().real(), 1.0, 1e-12);
}

TEST(Verification, AllChecksPass) {
  for (const auto& r : run_verification()) EXPECT_TRUE(r.passed) << r.check_name << ": " << r.max_abs_error << " " << r.detail;
}

TEST(Verification, DetectsPerturbedOutputFormula) {
  SpectraProvider sp;
  sp.two_use_output = [](const DampingParams& d, double p) {
    auto v = two_use_output_spectrum(d, p).expanded();
    v[0] += 1e-3;
    v[1] -= 1e-3;
    return Spectrum::from_values(v);
  };
  EXPECT_FALSE(check_two_use_spectra(sp).passed);
}

TEST(Verification, DetectsPerturbedCoherentFormula) {
  SpectraProvider sp;
  sp.coherent_input = [](const DampingParams& d, double p, double r2) {
    auto s = coherent_input_spectra(d, p, r2);
    auto v = s.environment.expanded();
    v[0] += 1e-3;
    v[1] -= 1e-3;
    return SpectrumPair{s.output, Spectrum::from_values(v)};
  };
  EXPECT_FALSE(check_coherent_input_spectra(sp).passed);
}

TEST(Verification, BrokenNormalisationIsReportedNotThrown) {
  SpectraProvider sp;
  sp.memoryless = [](int n, double chi, double p) {
    if (p > 0.5) throw internal_error("injected");
    return n_use_memoryless_spectra(n, chi, p);
  };
  const auto r = check_n_use_spectra(MemoryMode::none, sp);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.detail.find("injected"), std::string::npos);
}

TEST(Linspace, Endpoints) {
  const auto v = linspace(0.0, half_pi, 7);
  EXPECT_EQ(v.front(), 0.0);
  EXPECT_EQ(v.back(), half_pi);
  EXPECT_EQ(v.size(), 7u);
}
