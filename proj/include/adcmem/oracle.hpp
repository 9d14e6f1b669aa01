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

#pragma once

// Brute-force cross-checks of the closed forms: dense channel application
// plus diagonalisation, purification-based entropy exchange, Lindblad
// propagators and exhaustive grid search. None of these routes call the
// closed-form spectra.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "adcmem/capacity.hpp"
#include "adcmem/channels.hpp"
#include "adcmem/linalg.hpp"
#include "adcmem/parallel.hpp"
#include "adcmem/spectra.hpp"

namespace adcmem {

struct OracleReport {
  std::string check_name;
  double max_abs_error = 0.0;
  std::size_t grid_points = 0;
  double threshold = 0.0;
  bool passed = false;
  std::string detail;  // set when the check aborted
};

inline constexpr double oracle_eigenvalue_floor = 1e-13;

inline Spectrum spectrum_of(const DensityOperator& rho) {
  const auto eig = eig_hermitian(rho.matrix());
  std::vector<double> kept;
  for (double v : eig.values)
    if (v >= oracle_eigenvalue_floor) kept.push_back(v);
  return Spectrum::from_values(kept);
}

/// Spectrum of apply(k, rho) by dense diagonalisation.
inline Spectrum spectrum_via_diagonalization(const KrausSet& k, const DensityOperator& rho) {
  return spectrum_of(apply(k, rho));
}

inline Spectrum environment_spectrum_via_diagonalization(const KrausSet& k, const DensityOperator& rho,
                                                         EnvironmentBasis basis = EnvironmentBasis::labelled) {
  return spectrum_of(environment_output(k, rho, basis));
}

inline constexpr std::size_t max_purified_dim = 64;

/// Entropy (bits) of (channel (x) id)(|psi><psi|) for a purification
/// |psi> = sum_i sqrt(l_i) |v_i>_S |i>_R of rho.
inline double entropy_exchange_via_purification(const KrausSet& k, const DensityOperator& rho) {
  const std::size_t d = rho.dim();
  if (d > max_purified_dim)
    throw size_error("entropy_exchange_via_purification: state dim " + std::to_string(d) + " exceeds " +
                     std::to_string(max_purified_dim));
  if (d != k.dim()) throw contract_error("entropy_exchange_via_purification: dimension mismatch");

  const auto eig = eig_hermitian(rho.matrix());
  ComplexMatrix joint(d * d);
  std::vector<complex> phi(d * d);
  for (const auto& g : k.groups()) {
    if (g.weight == 0.0) continue;
    for (const auto& a : g.operators) {
      // phi = (A (x) I) |psi>, system index major.
      std::fill(phi.begin(), phi.end(), complex{});
      for (std::size_t i = 0; i < d; ++i) {
        const double amp = std::sqrt(std::max(0.0, eig.values[i]));
        if (amp == 0.0) continue;
        for (std::size_t row = 0; row < d; ++row) {
          complex s = 0.0;
          for (std::size_t col = 0; col < d; ++col) s += a(row, col) * eig.vectors(col, i);
          phi[row * d + i] = amp * s;
        }
      }
      for (std::size_t x = 0; x < d * d; ++x) {
        if (phi[x] == complex{}) continue;
        for (std::size_t y = 0; y < d * d; ++y) joint(x, y) += g.weight * phi[x] * std::conj(phi[y]);
      }
    }
  }
  const auto values = eig_hermitian(joint).values;
  double h = 0.0;
  for (double v : values)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

/// Column-stacked Liouvillian of L(rho) = -a/2 (J^dag J rho + rho J^dag J - 2 J rho J^dag).
inline ComplexMatrix vectorized_liouvillian(const ComplexMatrix& jump, double rate) {
  const std::size_t d = jump.dim();
  const ComplexMatrix id = ComplexMatrix::identity(d);
  const ComplexMatrix jj = jump.adjoint() * jump;
  ComplexMatrix l = kron(id, jj);
  l += kron(jj.transpose(), id);
  l.add_scaled(kron(jump.conjugate(), jump), -2.0);
  l *= -0.5 * rate;
  return l;
}

/// Propagates the collective lowering operator sigma^(x)n for the time at
/// which exp(-alpha t/2) = cos chi and compares exp(L t) with the perfect
/// memory Kraus map on every matrix unit |i><j|.
inline OracleReport lindblad_propagator_check(int n, double chi, double threshold = 1e-8) {
  detail::check_qubits(n, 2, 5, "lindblad_propagator_check");
  checked_chi(chi);
  if (!(half_pi - chi > 1e-12)) throw domain_error("lindblad_propagator_check: chi = pi/2 needs infinite time");

  const ComplexMatrix lowering{{0.0, 0.0}, {1.0, 0.0}};  // damped (index 0) -> ground
  ComplexMatrix jump = lowering;
  for (int k = 1; k < n; ++k) jump = kron(jump, lowering);

  const double rate = 1.0;
  const double t = -2.0 * std::log(std::cos(chi)) / rate;
  const ComplexMatrix propagator = expm(vectorized_liouvillian(jump, rate), t);
  const KrausSet kraus = n_use_perfect_memory_kraus(n, chi);

  const std::size_t d = jump.dim();
  double err = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix unit(d);
      unit(i, j) = 1.0;
      const ComplexMatrix mapped = kraus_map(kraus, unit);
      const std::size_t col = j * d + i;
      for (std::size_t b = 0; b < d; ++b)
        for (std::size_t a = 0; a < d; ++a) err = std::max(err, std::abs(propagator(b * d + a, col) - mapped(a, b)));
    }
  return {"lindblad n=" + std::to_string(n) + " chi=" + std::to_string(chi), err, d * d, threshold, err <= threshold,
          {}};
}

/// Exhaustive scan of two-use I_c on p_i = i / (points - 1).
inline CapacityResult grid_search_capacity(const DampingParams& params, std::size_t points) {
  if (points < 100) throw contract_error("grid_search_capacity: needs at least 100 points");
  CapacityResult r;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points; ++i) {
    const double p = static_cast<double>(i) / static_cast<double>(points - 1);
    const double v = two_use_coherent_information(params, p);
    if (v > best) {
      best = v;
      r.p_star = p;
    }
  }
  r.raw_maximum = best;
  r.q_value = clamp_capacity(best);
  r.uses = 2;
  r.q_per_use = r.q_value / 2.0;
  r.evaluations = points;
  r.bracket_width = 1.0 / static_cast<double>(points - 1);
  return r;
}

// ---------------------------------------------------------------------------
// Random test objects.

/// Ginibre-distributed mixed state G G^dag / Tr, or a random pure state.
template <class Rng>
DensityOperator random_density_operator(std::size_t dim, Rng& rng, bool pure = false) {
  std::normal_distribution<double> normal;
  const std::size_t cols = pure ? 1 : dim;
  std::vector<complex> g(dim * cols);
  for (auto& v : g) v = {normal(rng), normal(rng)};
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      complex s = 0.0;
      for (std::size_t k = 0; k < cols; ++k) s += g[i * cols + k] * std::conj(g[j * cols + k]);
      m(i, j) = s;
    }
  m *= 1.0 / m.trace().real();
  for (std::size_t i = 0; i < dim; ++i)  // exact Hermiticity
    for (std::size_t j = i + 1; j < dim; ++j) m(j, i) = std::conj(m(i, j));
  return DensityOperator(std::move(m));
}

/// Random channel from the blocks of a Haar-like isometry (Gram-Schmidt on a
/// Gaussian (count*dim) x dim matrix).
template <class Rng>
KrausSet random_kraus_set(std::size_t dim, std::size_t count, Rng& rng) {
  std::normal_distribution<double> normal;
  const std::size_t rows = count * dim;
  std::vector<std::vector<complex>> cols(dim, std::vector<complex>(rows));
  for (auto& c : cols)
    for (auto& v : c) v = {normal(rng), normal(rng)};
  for (std::size_t j = 0; j < dim; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < j; ++k) {
        complex dot = 0.0;
        for (std::size_t r = 0; r < rows; ++r) dot += std::conj(cols[k][r]) * cols[j][r];
        for (std::size_t r = 0; r < rows; ++r) cols[j][r] -= dot * cols[k][r];
      }
    double norm = 0.0;
    for (const auto& v : cols[j]) norm += std::norm(v);
    norm = std::sqrt(norm);
    for (auto& v : cols[j]) v /= norm;
  }
  std::vector<ComplexMatrix> ops;
  for (std::size_t b = 0; b < count; ++b) {
    ComplexMatrix a(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) a(i, j) = cols[j][b * dim + i];
    ops.push_back(std::move(a));
  }
  return KrausSet(std::move(ops));
}

// ---------------------------------------------------------------------------
// Verification suite.

/// The closed forms under test. Swappable so that a deliberately wrong
/// formula can be shown to fail verification.
struct SpectraProvider {
  std::function<Spectrum(const DampingParams&, double)> two_use_output = two_use_output_spectrum;
  std::function<Spectrum(const DampingParams&, double)> two_use_environment = two_use_environment_spectrum;
  std::function<SpectrumPair(const DampingParams&, double, double)> coherent_input =
      [](const DampingParams& d, double p, double r2) { return coherent_input_spectra(d, p, r2); };
  std::function<SpectrumPair(int, double, double)> memoryless = n_use_memoryless_spectra;
  std::function<SpectrumPair(int, double, double)> perfect_memory = n_use_perfect_memory_spectra;
};

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = n == 1 ? lo : (i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  return v;
}

namespace detail {

template <class Body>
OracleReport run_check(std::string name, double threshold, Body&& body) {
  OracleReport r{std::move(name), 0.0, 0, threshold, false, {}};
  try {
    body(r);
    r.passed = r.max_abs_error <= threshold;
  } catch (const std::exception& e) {
    r.max_abs_error = std::numeric_limits<double>::infinity();
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

inline void track(OracleReport& r, double err) {
  r.max_abs_error = std::max(r.max_abs_error, err);
  ++r.grid_points;
}

}  // namespace detail

struct GridSizes {
  std::size_t chi = 21, mu = 11, p = 11;                                      // two-use
  std::size_t coherent_chi = 11, coherent_mu = 6, coherent_p = 11, coherent_r2 = 6;
  std::size_t n_use_chi = 11, n_use_p = 11;
  int n_use_min = 2, n_use_max = 6;
};

inline OracleReport check_two_use_spectra(const SpectraProvider& sp = {}, const GridSizes& g = {}) {
  return detail::run_check("two-use spectra vs dense diagonalisation", 1e-10, [&](OracleReport& r) {
    for (double chi : linspace(0.0, half_pi, g.chi))
      for (double mu : linspace(0.0, 1.0, g.mu)) {
        const DampingParams params(chi, mu);
        const KrausSet k = two_use_kraus(params);
        for (double p : linspace(0.0, 1.0, g.p)) {
          const auto rho = product_state(qubit_state(p), 2);
          detail::track(r, max_spectrum_diff(sp.two_use_output(params, p), spectrum_via_diagonalization(k, rho)));
          r.max_abs_error = std::max(r.max_abs_error, max_spectrum_diff(sp.two_use_environment(params, p),
                                                                        environment_spectrum_via_diagonalization(k, rho)));
        }
      }
  });
}

inline OracleReport check_coherent_input_spectra(const SpectraProvider& sp = {}, const GridSizes& g = {}) {
  return detail::run_check("coherent-input spectra vs dense diagonalisation", 1e-10, [&](OracleReport& r) {
    for (double chi : linspace(0.0, half_pi, g.coherent_chi))
      for (double mu : linspace(0.0, 1.0, g.coherent_mu)) {
        const DampingParams params(chi, mu);
        const KrausSet k = two_use_kraus(params);
        for (double p : linspace(0.0, 1.0, g.coherent_p))
          for (double frac : linspace(0.0, 1.0, g.coherent_r2)) {
            const InputParams input(p, frac * p * (1.0 - p));
            const auto rho = rotated_coherent_input(input);
            const auto s = sp.coherent_input(params, input.p(), input.r2());
            detail::track(r, max_spectrum_diff(s.output, spectrum_via_diagonalization(k, rho)));
            r.max_abs_error =
                std::max(r.max_abs_error, max_spectrum_diff(s.environment, environment_spectrum_via_diagonalization(k, rho)));
          }
      }
  });
}

inline OracleReport check_n_use_spectra(MemoryMode memory, const SpectraProvider& sp = {}, const GridSizes& g = {}) {
  const std::string name = memory == MemoryMode::none ? "n-use memoryless spectra vs dense diagonalisation"
                                                      : "n-use perfect-memory spectra vs dense diagonalisation";
  return detail::run_check(name, 1e-10, [&](OracleReport& r) {
    for (int n = g.n_use_min; n <= g.n_use_max; ++n)
      for (double chi : linspace(0.0, half_pi, g.n_use_chi)) {
        const KrausSet k = memory == MemoryMode::none ? n_use_memoryless_kraus(n, chi) : n_use_perfect_memory_kraus(n, chi);
        for (double p : linspace(0.0, 1.0, g.n_use_p)) {
          const auto rho = product_state(qubit_state(p), n);
          const auto s = memory == MemoryMode::none ? sp.memoryless(n, chi, p) : sp.perfect_memory(n, chi, p);
          detail::track(r, max_spectrum_diff(s.output, spectrum_via_diagonalization(k, rho)));
          r.max_abs_error =
              std::max(r.max_abs_error, max_spectrum_diff(s.environment, environment_spectrum_via_diagonalization(k, rho)));
        }
      }
  });
}

/// Every closed-form spectrum on the verification grids: |sum - 1| and the
/// negativity below zero, reported as one error.
inline OracleReport check_normalization(const SpectraProvider& sp = {}, const GridSizes& g = {}) {
  return detail::run_check("spectrum normalisation and positivity", 1e-10, [&](OracleReport& r) {
    auto record = [&](const Spectrum& s) {
      double err = std::abs(s.total() - 1.0);
      // Spectrum already throws below -1e-12; this guards the clipped value.
      if (s.min_raw_value() < -Spectrum::negativity_tolerance) err = std::numeric_limits<double>::infinity();
      detail::track(r, err);
    };
    for (double chi : linspace(0.0, half_pi, g.chi))
      for (double mu : linspace(0.0, 1.0, g.mu))
        for (double p : linspace(0.0, 1.0, g.p)) {
          const DampingParams params(chi, mu);
          record(sp.two_use_output(params, p));
          record(sp.two_use_environment(params, p));
        }
    for (double chi : linspace(0.0, half_pi, g.coherent_chi))
      for (double mu : linspace(0.0, 1.0, g.coherent_mu))
        for (double p : linspace(0.0, 1.0, g.coherent_p))
          for (double frac : linspace(0.0, 1.0, g.coherent_r2)) {
            const auto s = sp.coherent_input(DampingParams(chi, mu), p, frac * p * (1.0 - p));
            record(s.output);
            record(s.environment);
          }
    for (int n = 1; n <= max_qubits; ++n)
      for (double chi : linspace(0.0, half_pi, g.n_use_chi))
        for (double p : linspace(0.0, 1.0, g.n_use_p)) {
          const auto a = sp.memoryless(n, chi, p);
          record(a.output);
          record(a.environment);
          if (n >= 2) {
            const auto b = sp.perfect_memory(n, chi, p);
            record(b.output);
            record(b.environment);
          }
        }
  });
}

inline OracleReport check_completeness(const GridSizes& g = {}) {
  return detail::run_check("Kraus completeness", KrausSet::completeness_tolerance, [&](OracleReport& r) {
    for (double chi : linspace(0.0, half_pi, g.chi)) {
      detail::track(r, single_use_kraus(chi).completeness_error());
      for (double mu : linspace(0.0, 1.0, g.mu)) detail::track(r, two_use_kraus(DampingParams(chi, mu)).completeness_error());
      for (int n = 2; n <= 8; ++n) detail::track(r, n_use_perfect_memory_kraus(n, chi).completeness_error());
      for (int n = 1; n <= 6; ++n) detail::track(r, n_use_memoryless_kraus(n, chi).completeness_error());
    }
  });
}

/// Random channel/state pairs: two-use memory channels, single use, perfect
/// memory over three uses and generic random channels.
inline OracleReport check_entropy_exchange(std::size_t pairs = 200, std::uint64_t seed = 20260101) {
  return detail::run_check("entropy exchange: purification vs complementary channel", 1e-9, [&](OracleReport& r) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> chi_dist(0.0, half_pi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < pairs; ++i) {
      const bool pure = i % 7 == 3;
      std::optional<KrausSet> k;
      switch (i % 4) {
        case 0: k.emplace(two_use_kraus(DampingParams(chi_dist(rng), unit(rng)))); break;
        case 1: k.emplace(single_use_kraus(chi_dist(rng))); break;
        case 2: k.emplace(n_use_perfect_memory_kraus(3, chi_dist(rng))); break;
        default: k.emplace(random_kraus_set(2 + i % 3, 2 + i % 2, rng)); break;
      }
      const auto rho = random_density_operator(k->dim(), rng, pure);
      const double via_purification = entropy_exchange_via_purification(*k, rho);
      const double via_environment =
          von_neumann_entropy(environment_spectrum_via_diagonalization(*k, rho, EnvironmentBasis::complementary));
      detail::track(r, std::abs(via_purification - via_environment));
    }
  });
}

inline std::vector<OracleReport> check_lindblad(const std::vector<int>& ns = {2, 3, 4},
                                                const std::vector<double>& chis = {0.25, 0.5, 1.0, 1.5}) {
  std::vector<OracleReport> out;
  for (int n : ns)
    for (double chi : chis)
      out.push_back(detail::run_check("lindblad propagator n=" + std::to_string(n) + " chi=" + std::to_string(chi), 1e-8,
                                      [&](OracleReport& r) {
                                        const auto rep = lindblad_propagator_check(n, chi);
                                        r.max_abs_error = rep.max_abs_error;
                                        r.grid_points = rep.grid_points;
                                      }));
  return out;
}

/// |p_star - grid argmax| on a 5 x 5 (chi, mu) grid.
inline OracleReport check_optimizer(std::size_t points = 100000) {
  return detail::run_check("optimizer vs " + std::to_string(points) + "-point grid", 2e-5, [&](OracleReport& r) {
    const auto chis = linspace(0.1, 1.4, 5);
    const auto mus = linspace(0.0, 1.0, 5);
    const auto errs = parallel_map(25, [&](std::size_t k) {
      const DampingParams params(chis[k / 5], mus[k % 5]);
      return std::abs(capacity_two_use(params).p_star - grid_search_capacity(params, points).p_star);
    });
    for (double e : errs) detail::track(r, e);
  });
}

/// Two-use spectra at mu = 1 against perfect memory with n = 2.
inline OracleReport check_perfect_memory_identity(const SpectraProvider& sp = {}, const GridSizes& g = {}) {
  return detail::run_check("two-use mu=1 vs perfect memory n=2", 1e-12, [&](OracleReport& r) {
    for (double chi : linspace(0.0, half_pi, g.chi))
      for (double p : linspace(0.0, 1.0, 21)) {
        const DampingParams params(chi, 1.0);
        const auto pm = sp.perfect_memory(2, chi, p);
        detail::track(r, max_spectrum_diff(sp.two_use_output(params, p), pm.output));
        r.max_abs_error = std::max(r.max_abs_error, max_spectrum_diff(sp.two_use_environment(params, p), pm.environment));
      }
  });
}

/// Every oracle check, in a fixed order.
/// Every check above. Checks are independent and run concurrently; the report
/// order is fixed.
inline std::vector<OracleReport> run_verification(const SpectraProvider& sp = {}) {
  using Reports = std::vector<OracleReport>;
  const std::vector<std::function<Reports()>> checks = {
      [&] { return Reports{check_two_use_spectra(sp)}; },
      [&] { return Reports{check_coherent_input_spectra(sp)}; },
      [&] { return Reports{check_n_use_spectra(MemoryMode::none, sp)}; },
      [&] { return Reports{check_n_use_spectra(MemoryMode::perfect, sp)}; },
      [&] { return Reports{check_normalization(sp)}; },
      [&] { return Reports{check_completeness()}; },
      [&] { return Reports{check_entropy_exchange()}; },
      [&] { return check_lindblad(); },
      [&] { return Reports{check_optimizer()}; },
      [&] { return Reports{check_perfect_memory_identity(sp)}; },
  };
  Reports out;
  for (auto& group : parallel_map(checks.size(), [&](std::size_t i) { return checks[i](); }))
    for (auto& r : group) out.push_back(std::move(r));
  return out;
}

}  // namespace adcmem
