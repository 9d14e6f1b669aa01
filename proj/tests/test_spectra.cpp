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

#include "adcmem/oracle.hpp"
#include "adcmem/spectra.hpp"

using namespace adcmem;
using std::numbers::pi;

namespace {

void expect_values(const Spectrum& s, std::vector<double> expected, double tol = 1e-12) {
  auto v = s.expanded();
  std::sort(expected.begin(), expected.end(), std::greater<>());
  ASSERT_EQ(v.size(), expected.size());
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(v[i], expected[i], tol) << "index " << i;
}

}  // namespace

TEST(Spectrum, ClipsDustButRejectsRealNegativity) {
  const Spectrum s({{-5e-13, 1}, {1.0 + 5e-13, 1}});
  EXPECT_EQ(s.expanded().back(), 0.0);
  EXPECT_LT(s.min_raw_value(), 0.0);
  EXPECT_THROW(Spectrum({{-1e-9, 1}, {1.0 + 1e-9, 1}}), internal_error);
  EXPECT_THROW(Spectrum({{0.5, 1}}), internal_error);
  EXPECT_THROW(Spectrum({{0.5, 0}, {1.0, 1}}), internal_error);
}

TEST(Spectrum, DiffPadsWithZeros) {
  const std::vector<double> a{1.0};
  const std::vector<double> b{1.0, 0.0, 0.0};
  EXPECT_EQ(max_spectrum_diff(Spectrum::from_values(a), Spectrum::from_values(b)), 0.0);
}

TEST(TwoUseOutput, NoiselessReproducesInput) {
  for (double mu : {0.0, 0.4, 1.0}) expect_values(two_use_output_spectrum(DampingParams(0.0, mu), 0.3), {0.09, 0.21, 0.21, 0.49});
}

TEST(TwoUseOutput, PerfectMemoryFullDamping) {
  expect_values(two_use_output_spectrum(DampingParams(half_pi, 1.0), 0.5), {0.0, 0.25, 0.25, 0.5});
}

TEST(TwoUseOutput, MemorylessIsProductOfSingleUse) {
  expect_values(two_use_output_spectrum(DampingParams(pi / 4, 0.0), 0.5), {0.0625, 0.1875, 0.1875, 0.5625});
}

TEST(TwoUseEnvironment, Examples) {
  expect_values(two_use_environment_spectrum(DampingParams(0.0, 0.6), 0.7), {0.0, 0.0, 0.0, 1.0});
  expect_values(two_use_environment_spectrum(DampingParams(half_pi, 0.0), 0.5), {0.25, 0.25, 0.25, 0.25});
  expect_values(two_use_environment_spectrum(DampingParams(half_pi, 1.0), 0.5), {0.25, 0.0, 0.0, 0.75});
}

TEST(TwoUseSpectra, RejectBadProbability) {
  EXPECT_THROW(two_use_output_spectrum(DampingParams(0.1, 0.1), 1.5), domain_error);
  EXPECT_THROW(two_use_environment_spectrum(DampingParams(0.1, 0.1), -0.5), domain_error);
}

TEST(MemorylessSpectra, SingleUse) {
  for (double chi : {0.2, 1.0}) {
    const double a = 0.37 * std::pow(std::cos(chi), 2);
    expect_values(n_use_memoryless_spectra(1, chi, 0.37).output, {a, 1.0 - a});
  }
}

TEST(MemorylessSpectra, ThreeUsesBinomial) {
  const auto s = n_use_memoryless_spectra(3, pi / 4, 0.5);
  expect_values(s.output, {0.015625, 0.046875, 0.046875, 0.046875, 0.140625, 0.140625, 0.140625, 0.421875});
  EXPECT_EQ(s.output.entries().size(), 4u);
}

TEST(MemorylessSpectra, TwoUsesMatchTwoUseAtZeroMemory) {
  for (double p : linspace(0.0, 1.0, 9)) {
    const auto s = n_use_memoryless_spectra(2, pi / 3, p);
    const DampingParams d(pi / 3, 0.0);
    EXPECT_LT(max_spectrum_diff(s.output, two_use_output_spectrum(d, p)), 1e-15);
    EXPECT_LT(max_spectrum_diff(s.environment, two_use_environment_spectrum(d, p)), 1e-15);
  }
}

TEST(PerfectMemorySpectra, TwoUsesMatchFullMemory) {
  for (double chi : linspace(0.0, half_pi, 11))
    for (double p : linspace(0.0, 1.0, 11)) {
      const auto s = n_use_perfect_memory_spectra(2, chi, p);
      const DampingParams d(chi, 1.0);
      EXPECT_LT(max_spectrum_diff(s.output, two_use_output_spectrum(d, p)), 1e-12);
      EXPECT_LT(max_spectrum_diff(s.environment, two_use_environment_spectrum(d, p)), 1e-12);
    }
}

TEST(PerfectMemorySpectra, NoiselessIsInputSpectrum) {
  const auto s = n_use_perfect_memory_spectra(3, 0.0, 0.3);
  expect_values(s.output, {0.027, 0.063, 0.063, 0.063, 0.147, 0.147, 0.147, 0.343});
  expect_values(s.environment, {0.0, 1.0});
}

TEST(PerfectMemorySpectra, ThreeUsesFullDamping) {
  const auto s = n_use_perfect_memory_spectra(3, half_pi, 0.5);
  expect_values(s.output, {0.0, 0.25, 0.125, 0.125, 0.125, 0.125, 0.125, 0.125});
  expect_values(s.environment, {0.125, 0.875});
}

TEST(PerfectMemorySpectra, MatchDenseDiagonalisation) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u;
  const auto k = n_use_perfect_memory_kraus(4, 0.9);
  for (int t = 0; t < 4; ++t) {
    const double p = u(rng);
    const auto rho = product_state(qubit_state(p), 4);
    const auto s = n_use_perfect_memory_spectra(4, 0.9, p);
    EXPECT_LT(max_spectrum_diff(s.output, spectrum_via_diagonalization(k, rho)), 1e-10);
    EXPECT_LT(max_spectrum_diff(s.environment, environment_spectrum_via_diagonalization(k, rho)), 1e-10);
  }
}

TEST(InputParams, Validation) {
  EXPECT_THROW(InputParams(0.5, 0.3), domain_error);
  EXPECT_THROW(InputParams(0.5, -0.01), domain_error);
  EXPECT_NO_THROW(InputParams(0.5, 0.25));
  const InputParams in(0.8, 0.0);
  EXPECT_NEAR(in.signed_gap(), -0.6, 1e-15);
  EXPECT_NEAR(in.damped_eigenvalue(), 0.8, 1e-15);
}

TEST(CoherentInputSpectra, ZeroCoherenceReducesToDiagonalInput) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u;
  for (int t = 0; t < 100; ++t) {
    const DampingParams d(half_pi * u(rng), u(rng));
    const double p = u(rng);
    const auto s = coherent_input_spectra(d, p, 0.0);
    EXPECT_LT(max_spectrum_diff(s.output, two_use_output_spectrum(d, p)), 1e-12);
    EXPECT_LT(max_spectrum_diff(s.environment, two_use_environment_spectrum(d, p)), 1e-12);
  }
}

TEST(CoherentInputSpectra, MaximalCoherenceGivesPureStates) {
  // Maximal coherence means a pure input. Up to p = 1/2 its eigenbasis puts it
  // in the ground state, which both the output and the environment keep pure.
  for (double p : {0.2, 0.5}) {
    const auto s = coherent_input_spectra(DampingParams(0.685, 0.8), p, p * (1.0 - p));
    expect_values(s.output, {0.0, 0.0, 0.0, 1.0}, 1e-12);
    expect_values(s.environment, {0.0, 0.0, 0.0, 1.0}, 1e-12);
  }
}

TEST(CoherentInputSpectra, PureInputHasZeroCoherentInformation) {
  for (double p : linspace(0.0, 1.0, 21))
    for (double mu : {0.0, 0.5, 1.0}) {
      const auto s = coherent_input_spectra(DampingParams(0.9, mu), p, p * (1.0 - p));
      EXPECT_NEAR(max_spectrum_diff(s.output, s.environment), 0.0, 1e-12) << "p=" << p << " mu=" << mu;
    }
}

TEST(CoherentInputSpectra, MatchRotatedInputDiagonalisation) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u;
  for (int t = 0; t < 50; ++t) {
    const DampingParams d(half_pi * u(rng), u(rng));
    const double p = u(rng);
    const InputParams in(p, p * (1.0 - p) * u(rng));
    const auto k = two_use_kraus(d);
    const auto rho = rotated_coherent_input(in);
    const auto s = coherent_input_spectra(d, in);
    EXPECT_LT(max_spectrum_diff(s.output, spectrum_via_diagonalization(k, rho)), 1e-10);
    EXPECT_LT(max_spectrum_diff(s.environment, environment_spectrum_via_diagonalization(k, rho)), 1e-10);
  }
}

TEST(CoherentInputSpectra, NormalisedEverywhere) {
  for (double chi : linspace(0.0, half_pi, 7))
    for (double mu : linspace(0.0, 1.0, 5))
      for (double p : linspace(0.0, 1.0, 9))
        for (double f : linspace(0.0, 1.0, 5)) {
          const auto s = coherent_input_spectra(DampingParams(chi, mu), p, f * p * (1.0 - p));
          EXPECT_NEAR(s.output.total(), 1.0, 1e-10);
          EXPECT_NEAR(s.environment.total(), 1.0, 1e-10);
        }
}

TEST(SpectraRanges, QubitCountLimits) {
  EXPECT_THROW(n_use_memoryless_spectra(0, 0.1, 0.5), size_error);
  EXPECT_THROW(n_use_memoryless_spectra(13, 0.1, 0.5), size_error);
  EXPECT_THROW(n_use_perfect_memory_spectra(1, 0.1, 0.5), size_error);
  EXPECT_NO_THROW(n_use_perfect_memory_spectra(12, 0.1, 0.5));
}
