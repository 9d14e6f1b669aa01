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

// Entropies, coherent information and its maximisation over the input
// occupation p.

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "adcmem/channels.hpp"
#include "adcmem/errors.hpp"
#include "adcmem/parallel.hpp"
#include "adcmem/spectra.hpp"

namespace adcmem {

/// -sum m_i l_i log2 l_i, with 0 log 0 = 0. Bits.
inline double von_neumann_entropy(const Spectrum& s) {
  double h = 0.0;
  for (const auto& e : s.entries())
    if (e.value > 0.0) h -= static_cast<double>(e.multiplicity) * e.value * std::log2(e.value);
  return h;
}

/// S(output) - S(environment). May be negative.
inline double coherent_information(const Spectrum& output, const Spectrum& environment) {
  return von_neumann_entropy(output) - von_neumann_entropy(environment);
}

/// Entropies of equal states computed through different closed forms differ
/// by a few ulps; values at or below this are reported as zero capacity.
inline constexpr double capacity_noise_floor = 1e-12;

inline double clamp_capacity(double raw_coherent_information) {
  return raw_coherent_information > capacity_noise_floor ? raw_coherent_information : 0.0;
}

enum class MemoryMode { none, perfect };

struct CapacityResult {
  double p_star = 0.0;
  std::optional<double> r2_star;
  double q_value = 0.0;       // bits, see clamp_capacity
  double q_per_use = 0.0;     // q_value / uses
  double raw_maximum = 0.0;   // max_p I_c before clamping
  int uses = 1;
  std::size_t evaluations = 0;
  double bracket_width = 0.0;
};

struct OptimizerOptions {
  std::size_t scan_points = 512;
  double tolerance = 1e-10;
};

struct ScalarMaximum {
  double argmax = 0.0;
  double value = 0.0;
  std::size_t evaluations = 0;
  double bracket_width = 0.0;
};

/// Maximises f on [0, 1]: an equally spaced scan, then golden-section search
/// on the two scan intervals around the best scan point. The argmax is the
/// final bracket midpoint.
template <class F>
ScalarMaximum maximize_on_unit_interval(F&& f, const OptimizerOptions& options = {}) {
  const std::size_t n = std::max<std::size_t>(options.scan_points, 3);
  ScalarMaximum r;
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f(static_cast<double>(i) / static_cast<double>(n - 1));
    ++r.evaluations;
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const double step = 1.0 / static_cast<double>(n - 1);
  double lo = best == 0 ? 0.0 : static_cast<double>(best - 1) * step;
  double hi = best == n - 1 ? 1.0 : static_cast<double>(best + 1) * step;

  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  r.evaluations += 2;
  while (hi - lo > options.tolerance) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
    ++r.evaluations;
  }
  r.argmax = 0.5 * (lo + hi);
  r.value = f(r.argmax);
  ++r.evaluations;
  r.bracket_width = hi - lo;
  // Not unimodal inside the bracket: keep the scan point.
  if (r.value < best_value) {
    r.argmax = static_cast<double>(best) * step;
    r.value = best_value;
  }
  return r;
}

inline double two_use_coherent_information(const DampingParams& params, double p) {
  return coherent_information(two_use_output_spectrum(params, p), two_use_environment_spectrum(params, p));
}

inline double n_use_coherent_information(int n, double chi, MemoryMode memory, double p) {
  const auto s = memory == MemoryMode::none ? n_use_memoryless_spectra(n, chi, p)
                                            : n_use_perfect_memory_spectra(n, chi, p);
  return coherent_information(s.output, s.environment);
}

inline double coherent_input_information(const DampingParams& params, double p, double r2) {
  const auto s = coherent_input_spectra(params, p, r2);
  return coherent_information(s.output, s.environment);
}

namespace detail {

inline CapacityResult to_capacity(const ScalarMaximum& m, int uses) {
  CapacityResult r;
  r.p_star = m.argmax;
  r.raw_maximum = m.value;
  r.q_value = clamp_capacity(m.value);
  r.uses = uses;
  r.q_per_use = r.q_value / uses;
  r.evaluations = m.evaluations;
  r.bracket_width = m.bracket_width;
  return r;
}

inline void check_memory_qubits(int n, MemoryMode memory) {
  if (memory == MemoryMode::none)
    check_qubits(n, 1, max_qubits, "capacity_n_use");
  else
    check_qubits(n, 2, max_qubits, "capacity_n_use");
}

}  // namespace detail

/// max_p I_c over two uses of the memory channel.
inline CapacityResult capacity_two_use(const DampingParams& params, const OptimizerOptions& options = {}) {
  return detail::to_capacity(
      maximize_on_unit_interval([&](double p) { return two_use_coherent_information(params, p); }, options), 2);
}

inline CapacityResult capacity_n_use(int n, double chi, MemoryMode memory, const OptimizerOptions& options = {}) {
  detail::check_memory_qubits(n, memory);
  checked_chi(chi);
  return detail::to_capacity(
      maximize_on_unit_interval([&](double p) { return n_use_coherent_information(n, chi, memory, p); }, options),
      n);
}

struct SurfacePoint {
  double p;
  double r2;
  double coherent_information;  // bits, unclamped
};

/// I_c on p in [0,1] (p_grid points) times r2 in [0, p(1-p)] (r2_grid points,
/// rescaled per p). Row-major in p.
inline std::vector<SurfacePoint> capacity_coherent_surface(const DampingParams& params, std::size_t p_grid,
                                                           std::size_t r2_grid) {
  if (p_grid < 2 || r2_grid < 2) throw size_error("capacity_coherent_surface: grid sizes must be >= 2");
  return parallel_map(p_grid * r2_grid, [&](std::size_t k) {
    const std::size_t i = k / r2_grid;
    const std::size_t j = k % r2_grid;
    const double p = static_cast<double>(i) / static_cast<double>(p_grid - 1);
    const double r2 = p * (1.0 - p) * static_cast<double>(j) / static_cast<double>(r2_grid - 1);
    return SurfacePoint{p, r2, coherent_input_information(params, p, r2)};
  });
}

/// Qubits separated by tau pass an oscillator that relaxes on the time scale
/// tau_d.
class OscillatorMemory {
 public:
  OscillatorMemory(double tau, double tau_d) : tau_(tau), tau_d_(tau_d) {
    if (!(tau >= 0.0)) throw domain_error("oscillator: tau must be >= 0");
    if (!(tau_d > 0.0)) throw domain_error("oscillator: tau_d must be > 0");
  }
  double tau() const noexcept { return tau_; }
  double tau_d() const noexcept { return tau_d_; }

 private:
  double tau_;
  double tau_d_;
};

/// mu = tau_d / (tau + tau_d)
inline double memory_from_oscillator(const OscillatorMemory& osc) {
  return osc.tau_d() / (osc.tau() + osc.tau_d());
}

}  // namespace adcmem
