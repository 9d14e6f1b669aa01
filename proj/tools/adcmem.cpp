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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "adcmem/adcmem.hpp"

namespace {

using namespace adcmem;

struct SweepFlags {
  double min;
  double max;
  std::size_t steps;
};

void add_sweep(CLI::App* cmd, const std::string& var, SweepFlags& f) {
  cmd->add_option("--" + var + "-min", f.min, "lower end of the " + var + " grid")->capture_default_str();
  cmd->add_option("--" + var + "-max", f.max, "upper end of the " + var + " grid")->capture_default_str();
  cmd->add_option("--" + var + "-steps", f.steps, "number of " + var + " grid points")->capture_default_str();
}

SweepSpec to_spec(const std::string& var, const SweepFlags& f) { return {var, f.min, f.max, f.steps}; }

SweepMode to_mode(const std::string& s) { return s == "optimize" ? SweepMode::optimize : SweepMode::fixed_p; }

std::optional<double> to_optional(const CLI::Option* opt, double v) {
  return opt->count() ? std::optional<double>(v) : std::nullopt;
}

int emit(const Table& table, OutputFormat format, const std::string& out_path) {
  const std::string text = render(table, format);
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "adcmem: cannot write " << out_path << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum capacity of an amplitude-damping channel with Markov memory"};
  app.set_version_flag("--version", std::string("adcmem ") + tool_version);
  app.fallthrough();

  std::string preset_name;
  std::string format_name = "csv";
  std::string out_path;
  app.add_option("--preset", preset_name, "named parameter set")
      ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5"}));
  app.add_option("--format", format_name, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--out", out_path, "write to this file instead of stdout");

  std::string chi_text = "0";
  std::string mode_name = "optimize";
  double p = 0.5;

  auto* two_use = app.add_subcommand("two-use", "two-use capacity against the memory parameter mu");
  SweepFlags mu_sweep{0.0, 1.0, 101};
  two_use->add_option("--chi", chi_text, "damping angle (radians or pi/k)")->required();
  add_sweep(two_use, "mu", mu_sweep);
  two_use->add_option("--mode", mode_name)->check(CLI::IsMember({"optimize", "fixed-p"}))->capture_default_str();
  auto* two_use_p = two_use->add_option("--p", p, "damped-state population (fixed-p mode)");

  auto* osc = app.add_subcommand("oscillator", "two-use capacity against the spacing of an oscillator memory");
  SweepFlags tau_sweep{0.0, 100.0, 101};
  double tau_d = 0.0;
  osc->add_option("--chi", chi_text, "damping angle (radians or pi/k)")->required();
  osc->add_option("--tau-d", tau_d, "memory relaxation time")->required();
  add_sweep(osc, "tau", tau_sweep);
  osc->add_option("--mode", mode_name)->check(CLI::IsMember({"optimize", "fixed-p"}))->capture_default_str();
  auto* osc_p = osc->add_option("--p", p, "damped-state population (fixed-p mode)");

  auto* n_use = app.add_subcommand("n-use", "n-use capacity per use against chi");
  SweepFlags chi_sweep{0.0, half_pi, 91};
  int n = 2;
  std::string memory_name = "perfect";
  n_use->add_option("--n", n, "number of channel uses")->required();
  n_use->add_option("--memory", memory_name)->check(CLI::IsMember({"none", "perfect"}))->capture_default_str();
  add_sweep(n_use, "chi", chi_sweep);
  auto* n_use_p = n_use->add_option("--p", p, "fixed damped-state population (default: optimise)");

  auto* coherence = app.add_subcommand("coherence", "coherent information over (p, |r|^2)");
  double mu = 0.0;
  std::size_t p_steps = 101;
  std::size_t r2_steps = 51;
  coherence->add_option("--chi", chi_text, "damping angle (radians or pi/k)")->required();
  coherence->add_option("--mu", mu, "memory parameter")->required();
  coherence->add_option("--p-steps", p_steps)->capture_default_str();
  coherence->add_option("--r2-steps", r2_steps)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the oracle verification suite");

  app.require_subcommand(0, 1);

  if (argc <= 1) {
    std::cerr << app.help();
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto format = format_name == "json" ? OutputFormat::json : OutputFormat::csv;
  try {
    if (verify->parsed()) return cmd_verify(std::cout);
    if (!preset_name.empty()) {
      if (app.get_subcommands().size() > 0) throw usage_error("--preset cannot be combined with a subcommand");
      return emit(preset(preset_name), format, out_path);
    }
    if (two_use->parsed())
      return emit(cmd_two_use(parse_angle(chi_text), to_spec("mu", mu_sweep), to_mode(mode_name), to_optional(two_use_p, p)),
                  format, out_path);
    if (osc->parsed())
      return emit(cmd_oscillator(parse_angle(chi_text), tau_d, to_spec("tau", tau_sweep), to_mode(mode_name),
                                 to_optional(osc_p, p)),
                  format, out_path);
    if (n_use->parsed())
      return emit(cmd_n_use(n, memory_name == "none" ? MemoryMode::none : MemoryMode::perfect, to_spec("chi", chi_sweep),
                            to_optional(n_use_p, p)),
                  format, out_path);
    if (coherence->parsed())
      return emit(cmd_coherence(parse_angle(chi_text), mu, p_steps, r2_steps), format, out_path);
    std::cerr << app.help();
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "adcmem: " << e.what() << '\n';
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "adcmem: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "adcmem: " << e.what() << '\n';
    return 1;
  }
}
