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

// Sweeps behind the command-line tool. Each command returns a Table, which
// renders to CSV or JSON; rendering is deterministic (12 significant
// digits, rows in grid order).

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "adcmem/capacity.hpp"
#include "adcmem/channels.hpp"
#include "adcmem/errors.hpp"
#include "adcmem/oracle.hpp"
#include "adcmem/parallel.hpp"

namespace adcmem {

inline constexpr const char* tool_version = "1.0.0";

/// Bad command-line input; the tool exits with status 2.
class usage_error : public error {
 public:
  using error::error;
};

/// Accepts a decimal number or one of pi/8, pi/6, pi/4, pi/3, pi/2.
inline double parse_angle(const std::string& text) {
  static const std::pair<const char*, double> named[] = {
      {"pi/8", std::numbers::pi / 8}, {"pi/6", std::numbers::pi / 6}, {"pi/4", std::numbers::pi / 4},
      {"pi/3", std::numbers::pi / 3}, {"pi/2", std::numbers::pi / 2}};
  for (const auto& [name, value] : named)
    if (text == name) return value;
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw usage_error("cannot parse angle '" + text + "'");
}

/// Linear grid over one variable, endpoints included.
struct SweepSpec {
  std::string variable;
  double min = 0.0;
  double max = 1.0;
  std::size_t steps = 2;

  std::vector<double> grid() const {
    if (!(min <= max)) throw usage_error("sweep over " + variable + ": min must not exceed max");
    if (steps < 2) throw usage_error("sweep over " + variable + ": at least 2 steps required");
    return linspace(min, max, steps);
  }
};

struct ResultRow {
  std::vector<std::pair<std::string, double>> inputs;
  double q_value = 0.0;
  double q_per_use = 0.0;
  std::optional<double> p_star;
};

struct Table {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<ResultRow> rows;

  void append(Table other) {
    for (auto& r : other.rows) rows.push_back(std::move(r));
  }
};

enum class OutputFormat { csv, json };

inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

inline std::string render_csv(const Table& t) {
  std::ostringstream out;
  if (t.rows.empty()) return {};
  const bool with_p_star = t.rows.front().p_star.has_value();
  for (const auto& [name, _] : t.rows.front().inputs) out << name << ',';
  out << "q_value,q_per_use" << (with_p_star ? ",p_star" : "") << '\n';
  for (const auto& r : t.rows) {
    for (const auto& [_, v] : r.inputs) out << format_number(v) << ',';
    out << format_number(r.q_value) << ',' << format_number(r.q_per_use);
    if (with_p_star) out << ',' << format_number(r.p_star.value_or(std::nan("")));
    out << '\n';
  }
  return out.str();
}

inline std::string render_json(const Table& t) {
  auto rounded = [](double v) { return std::stod(format_number(v)); };
  nlohmann::ordered_json doc;
  doc["meta"] = {{"command", t.command}, {"parameters", t.parameters},
                 {"tool", "adcmem"}, {"version", tool_version}};
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json row;
    for (const auto& [name, v] : r.inputs) row[name] = rounded(v);
    row["q_value"] = rounded(r.q_value);
    row["q_per_use"] = rounded(r.q_per_use);
    if (r.p_star) row["p_star"] = rounded(*r.p_star);
    doc["rows"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

inline std::string render(const Table& t, OutputFormat format) {
  return format == OutputFormat::csv ? render_csv(t) : render_json(t);
}

enum class SweepMode { optimize, fixed_p };

namespace detail {

inline void require_p(SweepMode mode, const std::optional<double>& p) {
  if (mode == SweepMode::fixed_p && !p) throw usage_error("fixed-p mode requires --p");
  if (p && !(*p >= 0.0 && *p <= 1.0)) throw usage_error("--p must lie in [0, 1]");
}

inline double checked_cli_chi(double chi) {
  if (!(chi >= 0.0 && chi <= half_pi)) throw usage_error("--chi must lie in [0, pi/2]");
  return chi;
}

// One two-use evaluation, as a row without inputs.
inline ResultRow two_use_row(const DampingParams& params, SweepMode mode, const std::optional<double>& p) {
  ResultRow row;
  if (mode == SweepMode::optimize) {
    const auto c = capacity_two_use(params);
    row.q_value = c.q_value;
    row.p_star = c.p_star;
  } else {
    row.q_value = clamp_capacity(two_use_coherent_information(params, *p));
  }
  row.q_per_use = row.q_value / 2.0;
  return row;
}

inline const char* mode_name(SweepMode m) { return m == SweepMode::optimize ? "optimize" : "fixed-p"; }

inline nlohmann::ordered_json sweep_json(const SweepSpec& s) {
  return {{"variable", s.variable}, {"min", s.min}, {"max", s.max}, {"steps", s.steps}};
}

}  // namespace detail

/// Two-use capacity against mu at fixed chi.
inline Table cmd_two_use(double chi, const SweepSpec& mu_sweep, SweepMode mode, std::optional<double> p = {}) {
  detail::require_p(mode, p);
  detail::checked_cli_chi(chi);
  const auto mus = mu_sweep.grid();
  if (mus.front() < 0.0 || mus.back() > 1.0) throw usage_error("mu sweep must lie in [0, 1]");
  Table t{"two-use", {{"chi", chi}, {"mode", detail::mode_name(mode)}, {"mu", detail::sweep_json(mu_sweep)}}, {}};
  if (p) t.parameters["p"] = *p;
  t.rows = parallel_map(mus.size(), [&](std::size_t i) {
    ResultRow row = detail::two_use_row(DampingParams(chi, mus[i]), mode, p);
    row.inputs = {{"chi", chi}};
    if (mode == SweepMode::fixed_p) row.inputs.emplace_back("p", *p);
    row.inputs.emplace_back("mu", mus[i]);
    return row;
  });
  return t;
}

/// Two-use capacity against the spacing tau of an oscillator memory.
inline Table cmd_oscillator(double chi, double tau_d, const SweepSpec& tau_sweep, SweepMode mode,
                            std::optional<double> p = {}) {
  detail::require_p(mode, p);
  detail::checked_cli_chi(chi);
  if (!(tau_d > 0.0)) throw usage_error("--tau-d must be positive");
  const auto taus = tau_sweep.grid();
  if (taus.front() < 0.0) throw usage_error("tau sweep must be nonnegative");
  Table t{"oscillator",
          {{"chi", chi}, {"tau_d", tau_d}, {"mode", detail::mode_name(mode)}, {"tau", detail::sweep_json(tau_sweep)}},
          {}};
  if (p) t.parameters["p"] = *p;
  t.rows = parallel_map(taus.size(), [&](std::size_t i) {
    const double mu = memory_from_oscillator(OscillatorMemory(taus[i], tau_d));
    ResultRow row = detail::two_use_row(DampingParams(chi, mu), mode, p);
    row.inputs = {{"chi", chi}};
    if (mode == SweepMode::fixed_p) row.inputs.emplace_back("p", *p);
    row.inputs.emplace_back("tau_d", tau_d);
    row.inputs.emplace_back("tau", taus[i]);
    row.inputs.emplace_back("mu", mu);
    return row;
  });
  return t;
}

/// n-use capacity per use against chi. Without p the input is optimised.
/// The mu column is 0 for memoryless and 1 for perfect memory.
inline Table cmd_n_use(int n, MemoryMode memory, const SweepSpec& chi_sweep, std::optional<double> p = {}) {
  const int lo = memory == MemoryMode::none ? 1 : 2;
  if (n < lo || n > max_qubits)
    throw usage_error("--n must lie in [" + std::to_string(lo) + ", " + std::to_string(max_qubits) + "]");
  detail::require_p(p ? SweepMode::fixed_p : SweepMode::optimize, p);
  const auto chis = chi_sweep.grid();
  if (chis.front() < 0.0 || chis.back() > half_pi) throw usage_error("chi sweep must lie in [0, pi/2]");
  const double mu = memory == MemoryMode::none ? 0.0 : 1.0;
  Table t{"n-use",
          {{"n", n}, {"memory", memory == MemoryMode::none ? "none" : "perfect"}, {"chi", detail::sweep_json(chi_sweep)}},
          {}};
  if (p) t.parameters["p"] = *p;
  t.rows = parallel_map(chis.size(), [&](std::size_t i) {
    ResultRow row;
    row.inputs = {{"n", n}, {"mu", mu}, {"chi", chis[i]}};
    if (p) {
      row.inputs.emplace_back("p", *p);
      row.q_value = clamp_capacity(n_use_coherent_information(n, chis[i], memory, *p));
    } else {
      const auto c = capacity_n_use(n, chis[i], memory);
      row.q_value = c.q_value;
      row.p_star = c.p_star;
    }
    row.q_per_use = row.q_value / n;
    return row;
  });
  return t;
}

/// I_c (clamped, see clamp_capacity) over the admissible (p, |r|^2) triangle.
inline Table cmd_coherence(double chi, double mu, std::size_t p_steps, std::size_t r2_steps) {
  detail::checked_cli_chi(chi);
  if (!(mu >= 0.0 && mu <= 1.0)) throw usage_error("--mu must lie in [0, 1]");
  if (p_steps < 2 || r2_steps < 2) throw usage_error("--p-steps and --r2-steps must be >= 2");
  Table t{"coherence", {{"chi", chi}, {"mu", mu}, {"p_steps", p_steps}, {"r2_steps", r2_steps}}, {}};
  for (const auto& pt : capacity_coherent_surface(DampingParams(chi, mu), p_steps, r2_steps)) {
    ResultRow row;
    row.inputs = {{"chi", chi}, {"mu", mu}, {"p", pt.p}, {"r2", pt.r2}};
    row.q_value = clamp_capacity(pt.coherent_information);
    row.q_per_use = row.q_value / 2.0;
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// Runs the oracle suite, one line per report. Returns the exit status.
inline int cmd_verify(std::ostream& out, const SpectraProvider& sp = {}) {
  bool ok = true;
  for (const auto& r : run_verification(sp)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", r.max_abs_error);
    out << (r.passed ? "PASS " : "FAIL ") << r.check_name << "  max_abs_error=" << buf << " threshold=" << r.threshold
        << " points=" << r.grid_points;
    if (!r.detail.empty()) out << "  (" << r.detail << ')';
    out << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

/// Named parameter sets fig2 to fig5, one table each.
inline Table preset(const std::string& name) {
  using std::numbers::pi;
  if (name == "fig2") {
    Table t{"preset", {{"preset", name}}, {}};
    const std::pair<double, double> curves[] = {{pi / 8, 0.465}, {pi / 6, 0.447}, {pi / 4, 0.389}, {pi / 3, 0.312}};
    for (const auto& [chi, p] : curves) t.append(cmd_two_use(chi, {"mu", 0.0, 1.0, 101}, SweepMode::fixed_p, p));
    return t;
  }
  if (name == "fig3") {
    Table t{"preset", {{"preset", name}}, {}};
    const std::pair<double, double> curves[] = {{0.225, 0.486}, {0.464, 0.456}};
    for (const auto& [chi, p] : curves)
      for (double tau_d : {20.0, 2.0})
        t.append(cmd_oscillator(chi, tau_d, {"tau", 0.0, 100.0, 101}, SweepMode::fixed_p, p));
    return t;
  }
  if (name == "fig4") {
    Table t{"preset", {{"preset", name}}, {}};
    const SweepSpec chis{"chi", 0.0, pi / 2, 91};
    t.append(cmd_n_use(1, MemoryMode::none, chis, 0.5));
    for (int n : {2, 3, 4, 6, 10}) t.append(cmd_n_use(n, MemoryMode::perfect, chis, 0.5));
    return t;
  }
  if (name == "fig5") {
    Table t = cmd_coherence(0.685, 0.8, 101, 51);
    t.command = "preset";
    t.parameters = {{"preset", name}, {"chi", 0.685}, {"mu", 0.8}, {"p_steps", 101}, {"r2_steps", 51}};
    return t;
  }
  throw usage_error("unknown preset '" + name + "' (expected fig2, fig3, fig4 or fig5)");
}

}  // namespace adcmem
