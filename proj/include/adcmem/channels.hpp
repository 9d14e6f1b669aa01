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

// Kraus models of the amplitude-damping channel with Markov-correlated
// memory, and their action on system and environment.
//
// Basis convention: the damped (excited) single-qubit state is the FIRST
// basis vector, so A0 = diag(cos chi, 1) and A1 moves amplitude from index 0
// to index 1. For n qubits, index 0 is "all damped" and 2^n - 1 is
// "all ground". Input occupations p always refer to the damped state.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "adcmem/errors.hpp"
#include "adcmem/linalg.hpp"

namespace adcmem {

inline constexpr double half_pi = std::numbers::pi / 2.0;
inline constexpr int max_qubits = 12;

inline double checked_chi(double chi) {
  if (!(chi >= 0.0 && chi <= half_pi))
    throw domain_error("damping parameter chi = " + std::to_string(chi) + " outside [0, pi/2]");
  return chi;
}

inline double checked_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw domain_error(std::string(name) + " = " + std::to_string(p) + " outside [0, 1]");
  return p;
}

/// Damping angle chi (damping probability sin^2 chi) and memory coefficient mu.
class DampingParams {
 public:
  DampingParams(double chi, double mu) : chi_(checked_chi(chi)), mu_(checked_probability(mu, "mu")) {}

  double chi() const noexcept { return chi_; }
  double mu() const noexcept { return mu_; }

 private:
  double chi_;
  double mu_;
};

/// Operators sharing one probability weight. Operator k writes the
/// environment basis vector environment_labels[k]; labels are distinct within
/// a group but different groups may reuse them.
struct KrausGroup {
  double weight = 1.0;
  std::vector<ComplexMatrix> operators;
  std::vector<std::size_t> environment_labels;
};

/// A channel rho -> sum_g w_g sum_k A_k rho A_k^dagger.
class KrausSet {
 public:
  static constexpr double completeness_tolerance = 1e-12;

  /// Single unweighted group; operator k gets environment vector k.
  explicit KrausSet(std::vector<ComplexMatrix> operators)
      : KrausSet(std::vector<KrausGroup>{make_group(1.0, std::move(operators))}) {}

  explicit KrausSet(std::vector<KrausGroup> groups) : groups_(std::move(groups)) {
    if (groups_.empty() || groups_.front().operators.empty())
      throw contract_error("KrausSet: needs at least one operator");
    dim_ = groups_.front().operators.front().dim();
    double total_weight = 0.0;
    for (const auto& g : groups_) {
      if (!(g.weight >= 0.0 && g.weight <= 1.0))
        throw contract_error("KrausSet: group weight outside [0, 1]");
      if (g.operators.empty()) throw contract_error("KrausSet: empty group");
      if (g.environment_labels.size() != g.operators.size())
        throw contract_error("KrausSet: one environment label per operator required");
      for (std::size_t i = 0; i < g.operators.size(); ++i) {
        if (g.operators[i].dim() != dim_) throw contract_error("KrausSet: operator dimension mismatch");
        for (std::size_t j = 0; j < i; ++j)
          if (g.environment_labels[i] == g.environment_labels[j])
            throw contract_error("KrausSet: duplicate environment label within a group");
        environment_dim_ = std::max(environment_dim_, g.environment_labels[i] + 1);
      }
      total_weight += g.weight;
      operator_count_ += g.operators.size();
    }
    if (std::abs(total_weight - 1.0) > completeness_tolerance)
      throw contract_error("KrausSet: group weights do not sum to 1");
    if (completeness_error() > completeness_tolerance)
      throw contract_error("KrausSet: completeness violated");
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t operator_count() const noexcept { return operator_count_; }
  std::size_t environment_dim() const noexcept { return environment_dim_; }
  const std::vector<KrausGroup>& groups() const noexcept { return groups_; }

  /// max |sum_g w_g sum_k A_k^dagger A_k - I|
  double completeness_error() const {
    ComplexMatrix sum(dim_);
    for (const auto& g : groups_)
      for (const auto& a : g.operators) sum.add_scaled(a.adjoint() * a, g.weight);
    return max_abs_diff(sum, ComplexMatrix::identity(dim_));
  }

 private:
  static KrausGroup make_group(double weight, std::vector<ComplexMatrix> ops) {
    std::vector<std::size_t> labels(ops.size());
    for (std::size_t k = 0; k < labels.size(); ++k) labels[k] = k;
    return KrausGroup{weight, std::move(ops), std::move(labels)};
  }

  std::vector<KrausGroup> groups_;
  std::size_t dim_ = 0;
  std::size_t operator_count_ = 0;
  std::size_t environment_dim_ = 0;
};

/// A0 = diag(cos chi, 1), A1 = sin chi |ground><damped|.
inline KrausSet single_use_kraus(double chi) {
  checked_chi(chi);
  ComplexMatrix a0 = ComplexMatrix::diagonal({std::cos(chi), 1.0});
  ComplexMatrix a1(2);
  a1(1, 0) = std::sin(chi);
  return KrausSet({std::move(a0), std::move(a1)});
}

namespace detail {

inline void check_qubits(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw size_error(std::string(what) + ": qubit count " + std::to_string(n) + " outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// A0 = I except the all-damped diagonal entry; A1 = single entry sin chi
// moving all-damped to all-ground.
inline std::vector<ComplexMatrix> collective_kraus(int n, double chi) {
  const std::size_t d = std::size_t{1} << n;
  ComplexMatrix a0 = ComplexMatrix::identity(d);
  a0(0, 0) = std::cos(chi);
  ComplexMatrix a1(d);
  a1(d - 1, 0) = std::sin(chi);
  return {std::move(a0), std::move(a1)};
}

}  // namespace detail

/// Two uses: weight 1-mu on the four products A_i (x) A_j (environment
/// vectors e_ij), weight mu on the collective pair A^c_00, A^c_11 which write
/// the same environment vectors e_00 and e_11.
inline KrausSet two_use_kraus(const DampingParams& params) {
  const auto single = single_use_kraus(params.chi());
  const auto& a = single.groups().front().operators;
  KrausGroup uncorrelated{1.0 - params.mu(), {}, {0, 1, 2, 3}};
  for (const auto& ai : a)
    for (const auto& aj : a) uncorrelated.operators.push_back(kron(ai, aj));
  KrausGroup correlated{params.mu(), detail::collective_kraus(2, params.chi()), {0, 3}};
  return KrausSet(std::vector<KrausGroup>{std::move(uncorrelated), std::move(correlated)});
}

/// Perfectly correlated damping over n uses (dim 2^n, two operators).
inline KrausSet n_use_perfect_memory_kraus(int n, double chi) {
  detail::check_qubits(n, 2, max_qubits, "n_use_perfect_memory_kraus");
  checked_chi(chi);
  return KrausSet(detail::collective_kraus(n, chi));
}

inline constexpr int max_memoryless_kraus_qubits = 8;

/// Memoryless n uses: all 2^n products A_{u1} (x) ... (x) A_{un}.
inline KrausSet n_use_memoryless_kraus(int n, double chi) {
  detail::check_qubits(n, 1, max_memoryless_kraus_qubits, "n_use_memoryless_kraus");
  const auto single = single_use_kraus(chi);
  std::vector<ComplexMatrix> ops = single.groups().front().operators;
  for (int k = 1; k < n; ++k) {
    std::vector<ComplexMatrix> next;
    next.reserve(ops.size() * 2);
    for (const auto& a : ops)
      for (const auto& b : single.groups().front().operators) next.push_back(kron(a, b));
    ops = std::move(next);
  }
  return KrausSet(std::move(ops));
}

/// sum_g w_g sum_k A_k x A_k^dagger for an arbitrary operator x.
inline ComplexMatrix kraus_map(const KrausSet& k, const ComplexMatrix& x) {
  if (x.dim() != k.dim())
    throw contract_error("kraus_map: operator dim " + std::to_string(x.dim()) +
                         " does not match channel dim " + std::to_string(k.dim()));
  ComplexMatrix out(k.dim());
  for (const auto& g : k.groups()) {
    if (g.weight == 0.0) continue;
    // a x a^dag as a (a x^dag)^dag keeps the sparse factor on the left.
    for (const auto& a : g.operators) out.add_scaled(a * (a * x.adjoint()).adjoint(), g.weight);
  }
  return out;
}

inline constexpr double apply_trace_tolerance = 1e-10;

inline DensityOperator apply(const KrausSet& k, const DensityOperator& rho) {
  ComplexMatrix out = kraus_map(k, rho.matrix());
  if (std::abs(out.trace() - 1.0) > apply_trace_tolerance)
    throw internal_error("apply: output trace deviates from 1");
  return DensityOperator(std::move(out));
}

enum class EnvironmentBasis {
  /// Operators write the environment vectors named by their labels; groups
  /// add incoherently. For two_use_kraus this is the 4-dim environment in
  /// which both noise sectors share |e_00> and |e_11>.
  labelled,
  /// One environment vector per sqrt(w)-weighted operator, coherences between
  /// all of them kept: the complementary channel of the Kraus representation.
  complementary,
};

/// Environment state after the interaction, entries Tr(A_i rho A_j^dagger).
inline DensityOperator environment_output(const KrausSet& k, const DensityOperator& rho,
                                          EnvironmentBasis basis = EnvironmentBasis::labelled) {
  if (rho.dim() != k.dim())
    throw contract_error("environment_output: state dim " + std::to_string(rho.dim()) +
                         " does not match channel dim " + std::to_string(k.dim()));

  // A_i rho, reused for every column.
  std::vector<ComplexMatrix> left;
  std::vector<double> weights;
  std::vector<std::size_t> group_of;
  std::vector<std::size_t> label_of;
  for (std::size_t g = 0; g < k.groups().size(); ++g) {
    const auto& grp = k.groups()[g];
    for (std::size_t i = 0; i < grp.operators.size(); ++i) {
      left.push_back(grp.operators[i] * rho.matrix());
      weights.push_back(grp.weight);
      group_of.push_back(g);
      label_of.push_back(grp.environment_labels[i]);
    }
  }
  // Nonzero entries of each A_j, conjugated: Tr(B A_j^dagger) = sum B_k conj(A_j,k).
  std::vector<std::vector<std::pair<std::size_t, complex>>> sparse;
  for (const auto& grp : k.groups())
    for (const auto& a : grp.operators) {
      auto& nz = sparse.emplace_back();
      const auto e = a.entries();
      for (std::size_t idx = 0; idx < e.size(); ++idx)
        if (e[idx] != complex{}) nz.emplace_back(idx, std::conj(e[idx]));
    }
  auto trace_with = [&](std::size_t i, std::size_t j) {
    const auto e = left[i].entries();
    complex t = 0.0;
    for (const auto& [idx, c] : sparse[j]) t += e[idx] * c;
    return t;
  };

  const std::size_t m = sparse.size();
  if (basis == EnvironmentBasis::complementary) {
    ComplexMatrix env(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        env(i, j) = std::sqrt(weights[i] * weights[j]) * trace_with(i, j);
    return DensityOperator(std::move(env));
  }

  ComplexMatrix env(k.environment_dim());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (group_of[i] != group_of[j] || weights[i] == 0.0) continue;
      env(label_of[i], label_of[j]) += weights[i] * trace_with(i, j);
    }
  return DensityOperator(std::move(env));
}

/// Single-qubit input with occupation p of the damped state and coherence r
/// between damped and ground state. Requires |r|^2 <= p(1-p).
inline DensityOperator qubit_state(double p, complex r = 0.0) {
  checked_probability(p, "p");
  if (std::norm(r) > p * (1.0 - p) + 1e-15)
    throw domain_error("qubit_state: |r|^2 exceeds p(1-p)");
  ComplexMatrix m(2);
  m(0, 0) = p;
  m(0, 1) = r;
  m(1, 0) = std::conj(r);
  m(1, 1) = 1.0 - p;
  return DensityOperator(std::move(m));
}

/// rho^{(x) n}
inline DensityOperator product_state(const DensityOperator& rho, int n) {
  if (n < 1) throw size_error("product_state: n must be positive");
  ComplexMatrix m = rho.matrix();
  for (int k = 1; k < n; ++k) m = kron(m, rho.matrix());
  return DensityOperator(std::move(m));
}

}  // namespace adcmem
