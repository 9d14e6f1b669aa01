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

// Closed-form eigenvalue spectra of channel outputs and environment outputs
// for product inputs. Spectra are stored as (value, multiplicity) pairs so
// the n-use sums never materialise 2^n eigenvalues.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "adcmem/channels.hpp"
#include "adcmem/errors.hpp"

namespace adcmem {

struct SpectrumEntry {
  double value;
  std::size_t multiplicity;
};

/// Nonnegative eigenvalues with multiplicities summing to one.
class Spectrum {
 public:
  static constexpr double negativity_tolerance = 1e-12;
  static constexpr double normalization_tolerance = 1e-10;

  /// Values in [-1e-12, 0) are clipped to zero; anything more negative, or a
  /// total away from one, throws internal_error.
  explicit Spectrum(std::vector<SpectrumEntry> entries) : entries_(std::move(entries)) {
    double total = 0.0;
    for (auto& e : entries_) {
      if (e.multiplicity == 0) throw internal_error("Spectrum: zero multiplicity");
      if (!std::isfinite(e.value)) throw internal_error("Spectrum: non-finite eigenvalue");
      min_raw_value_ = std::min(min_raw_value_, e.value);
      if (e.value < 0.0) {
        if (e.value < -negativity_tolerance)
          throw internal_error("Spectrum: eigenvalue " + std::to_string(e.value) + " is negative");
        e.value = 0.0;
      }
      total += e.value * static_cast<double>(e.multiplicity);
    }
    if (std::abs(total - 1.0) > normalization_tolerance)
      throw internal_error("Spectrum: eigenvalues sum to " + std::to_string(total));
    total_ = total;
  }

  static Spectrum from_values(std::span<const double> values) {
    std::vector<SpectrumEntry> e;
    e.reserve(values.size());
    for (double v : values) e.push_back({v, 1});
    return Spectrum(std::move(e));
  }

  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }

  /// Sum of value * multiplicity (after clipping).
  double total() const noexcept { return total_; }

  /// Smallest eigenvalue before clipping.
  double min_raw_value() const noexcept { return min_raw_value_; }

  std::size_t total_multiplicity() const noexcept {
    std::size_t m = 0;
    for (const auto& e : entries_) m += e.multiplicity;
    return m;
  }

  /// Every eigenvalue repeated by its multiplicity, descending.
  std::vector<double> expanded() const {
    std::vector<double> v;
    v.reserve(total_multiplicity());
    for (const auto& e : entries_) v.insert(v.end(), e.multiplicity, e.value);
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  }

 private:
  std::vector<SpectrumEntry> entries_;
  double total_ = 0.0;
  double min_raw_value_ = 0.0;
};

/// Largest difference between the sorted eigenvalue lists, the shorter one
/// padded with zeros.
inline double max_spectrum_diff(const Spectrum& a, const Spectrum& b) {
  auto x = a.expanded();
  auto y = b.expanded();
  const std::size_t n = std::max(x.size(), y.size());
  x.resize(n, 0.0);
  y.resize(n, 0.0);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

struct SpectrumPair {
  Spectrum output;
  Spectrum environment;
};

/// Occupation p of the damped state and squared coherence |r|^2 of a
/// single-qubit input.
class InputParams {
 public:
  InputParams(double p, double r2) : p_(checked_probability(p, "p")), r2_(r2) {
    if (!(r2 >= 0.0) || r2 > p * (1.0 - p) * (1.0 + 1e-12) + 1e-15)
      throw domain_error("coherence |r|^2 = " + std::to_string(r2) + " outside [0, p(1-p)]");
  }

  double p() const noexcept { return p_; }
  double r2() const noexcept { return r2_; }

  /// Half the eigenvalue gap of the input, signed like 1 - 2p so that the
  /// damped-state eigenvalue (1 - gap)/2 tends to p as r2 -> 0.
  double signed_gap() const noexcept {
    const double d = 1.0 - 2.0 * p_;
    const double g = std::sqrt(d * d + 4.0 * r2_);
    return d < 0.0 ? -g : g;
  }

  /// p(1-p) - |r|^2, the determinant of the input.
  double determinant() const noexcept { return std::max(0.0, p_ * (1.0 - p_) - r2_); }

  /// Eigenvalue of the input placed on the damped state once it is rotated
  /// onto its eigenbasis.
  double damped_eigenvalue() const noexcept { return 0.5 * (1.0 - signed_gap()); }

 private:
  double p_;
  double r2_;
};

namespace detail {

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::size_t binomial_count(int n, int k) {
  return static_cast<std::size_t>(std::llround(binomial(n, k)));
}

inline void check_p(double p) { checked_probability(p, "p"); }

}  // namespace detail

/// Output of the two-use memory channel on the product input with damped
/// occupation p: {l1, l2 (x2), l4}.
inline Spectrum two_use_output_spectrum(const DampingParams& params, double p) {
  detail::check_p(p);
  const double c = std::pow(std::cos(params.chi()), 2);
  const double s = std::pow(std::sin(params.chi()), 2);
  const double mu = params.mu();
  const double l1 = p * p * c * (c + mu * s);
  const double l2 = p * c * (1.0 - p * c) + mu * p * s * (1.0 - p * (1.0 + c));
  const double l4 = std::pow(1.0 - p * c, 2) + mu * p * s * (p * c - 2.0 * (1.0 - p));
  return Spectrum({{l1, 1}, {l2, 2}, {l4, 1}});
}

/// Environment of the two-use memory channel (shared-basis environment).
inline Spectrum two_use_environment_spectrum(const DampingParams& params, double p) {
  detail::check_p(p);
  const double c = std::pow(std::cos(params.chi()), 2);
  const double s = std::pow(std::sin(params.chi()), 2);
  const double mu = params.mu();
  const double e1 = p * p * s * (s + mu * c);
  const double e2 = (1.0 - mu) * p * s * (1.0 - p * s);
  const double e4 = std::pow(1.0 - p * s, 2) + mu * p * s * (2.0 - p * (1.0 + s));
  return Spectrum({{e1, 1}, {e2, 2}, {e4, 1}});
}

/// n memoryless uses on a product of identical diagonal qubits:
/// (p c^2)^(n-X) (1 - p c^2)^X with multiplicity C(n, X), and the same with
/// sin^2 for the environment.
inline SpectrumPair n_use_memoryless_spectra(int n, double chi, double p) {
  detail::check_qubits(n, 1, max_qubits, "n_use_memoryless_spectra");
  checked_chi(chi);
  detail::check_p(p);
  const double a = p * std::pow(std::cos(chi), 2);
  const double b = p * std::pow(std::sin(chi), 2);
  std::vector<SpectrumEntry> out;
  std::vector<SpectrumEntry> env;
  for (int x = 0; x <= n; ++x) {
    const std::size_t m = detail::binomial_count(n, x);
    out.push_back({std::pow(a, n - x) * std::pow(1.0 - a, x), m});
    env.push_back({std::pow(b, n - x) * std::pow(1.0 - b, x), m});
  }
  return {Spectrum(std::move(out)), Spectrum(std::move(env))};
}

/// n uses with perfectly correlated damping.
inline SpectrumPair n_use_perfect_memory_spectra(int n, double chi, double p) {
  detail::check_qubits(n, 2, max_qubits, "n_use_perfect_memory_spectra");
  checked_chi(chi);
  detail::check_p(p);
  const double c = std::pow(std::cos(chi), 2);
  const double s = std::pow(std::sin(chi), 2);
  const double pn = std::pow(p, n);
  std::vector<SpectrumEntry> out{{pn * c, 1}, {std::pow(1.0 - p, n) + pn * s, 1}};
  for (int y = 1; y < n; ++y)
    out.push_back({std::pow(p, n - y) * std::pow(1.0 - p, y), detail::binomial_count(n, y)});
  return {Spectrum(std::move(out)), Spectrum({{pn * s, 1}, {1.0 - pn * s, 1}})};
}

/// Two uses of the memory channel on the product of a coherent qubit input
/// rotated onto its eigenbasis. Depends on the input through the signed gap
/// G and determinant L only.
inline SpectrumPair coherent_input_spectra(const DampingParams& params, const InputParams& input) {
  const double c = std::pow(std::cos(params.chi()), 2);
  const double s = std::pow(std::sin(params.chi()), 2);
  const double mu = params.mu();
  const double gap = input.signed_gap();
  const double g = 1.0 - gap;
  const double det = input.determinant();

  const double u1 = 0.25 * g * g * c * (c + mu * s);
  const double u2 = 0.5 * c * (g * s + 2.0 * det * c) + mu * (det * (1.0 - c * c) - 0.5 * g * c * s);
  // mu multiplies both correction terms; without it the trace is not 1.
  const double u4 = 0.5 * (1.0 + s * s + gap * (1.0 - s * s) - 2.0 * det * c * c +
                           mu * (g * c * s - 2.0 * det * s * (2.0 + c)));

  const double e1 = 0.25 * g * g * s * (s + mu * c);
  const double e2 = 0.25 * (1.0 - mu) * s * (4.0 * det + g * g * c);
  const double e4 = 0.25 * (4.0 * gap + g * g * (1.0 + c * c) + 8.0 * det * c +
                            mu * (4.0 * det * (s - 2.0 * c) + 2.0 * g * (1.0 + c) - g * g * (1.0 + c * c)));

  return {Spectrum({{u1, 1}, {u2, 2}, {u4, 1}}), Spectrum({{e1, 1}, {e2, 2}, {e4, 1}})};
}

inline SpectrumPair coherent_input_spectra(const DampingParams& params, double p, double r2) {
  return coherent_input_spectra(params, InputParams(p, r2));
}

/// Dense two-qubit state the coherent-input spectra describe.
inline DensityOperator rotated_coherent_input(const InputParams& input) {
  return product_state(qubit_state(std::clamp(input.damped_eigenvalue(), 0.0, 1.0)), 2);
}

}  // namespace adcmem
