// Copyright 2026 The qprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qprobe/cli.hpp"

#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace qprobe::cli {

namespace {

using Command = std::function<int(const RunConfig&, std::ostream&)>;

void add_physics(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--x", cfg.x, "Family parameter x in [1/2, 1]");
  sub->add_option("--gamma", cfg.gamma, "Probe spontaneous-emission rate");
  sub->add_option("--g", cfg.g, "Atom-cavity coupling");
  sub->add_option("--delta", cfg.delta, "Atom-cavity detuning (dispersive models)");
  sub->add_option("--nmax", cfg.nmax, "Photon-number cutoff per cavity mode");
  sub->add_option("--model", cfg.model, "secii-qubit | secii-boson | seciii-full | seciii-eff");
  sub->add_option("--dt", cfg.dt, "Master-equation step");
  sub->add_option("--out", cfg.out, "Output file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const std::vector<std::string> expanded = expand_config(args);

    RunConfig cfg;
    CLI::App app{"qprobe: correlation measures and nondestructive probing of two-qubit states", "qprobe"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("qprobe 0.1.0"));
    app.add_option("--config", "JSON file of option defaults (flags take precedence)");

    Command selected;
    auto subcommand = [&](const char* name, const char* help, Command fn) {
      CLI::App* sub = app.add_subcommand(name, help);
      sub->callback([&selected, fn] { selected = fn; });
      return sub;
    };

    CLI::App* measures = subcommand("measures", "Correlation measures of the one-parameter state", cmd_measures);
    add_physics(measures, cfg);

    CLI::App* sweep = subcommand("sweep", "Measures on an x grid at the first readout time", cmd_sweep);
    add_physics(sweep, cfg);
    sweep->add_option("--x-start", cfg.x_start, "Grid start");
    sweep->add_option("--x-stop", cfg.x_stop, "Grid stop");
    sweep->add_option("--x-step", cfg.x_step, "Grid step");
    sweep->add_flag("--emit-svg", cfg.emit_svg, "Also write SVG plots next to --out");

    CLI::App* evolve = subcommand("evolve", "Time series of the A,B measures under a model", cmd_evolve);
    add_physics(evolve, cfg);
    evolve->add_option("--t-end", cfg.t_end, "Final time");
    evolve->add_option("--samples", cfg.samples, "Number of sample times including t = 0");
    evolve->add_option("--probe", cfg.probe, "Initial probe state: g or e");

    CLI::App* probe = subcommand("probe", "One probe cycle with readout and restoration check", cmd_probe);
    add_physics(probe, cfg);
    probe->add_option("--n", cfg.n, "Readout after n half periods (odd)");
    probe->add_option("--shots", cfg.shots, "Simulated probe shots");
    probe->add_option("--seed", cfg.seed, "Sampling seed");

    CLI::App* qnd = subcommand("qnd", "Repeated nondestructive estimation of x", cmd_qnd);
    add_physics(qnd, cfg);
    qnd->add_option("--cycles", cfg.cycles, "Number of e/g probe cycles");
    qnd->add_option("--shots", cfg.shots, "Shots per stage (0 = exact statistics)");
    qnd->add_option("--seed", cfg.seed, "Sampling seed");
    qnd->add_flag("--report-tm", cfg.report_tm, "Report transfer times and fidelities");

    CLI::App* plot = subcommand("plot", "Render CSV columns as an SVG line plot", cmd_plot);
    plot->add_option("--csv", cfg.csv, "Input CSV");
    plot->add_option("--columns", cfg.columns, "Comma-separated column names")->delimiter(',');
    plot->add_option("--title", cfg.title, "Plot title");
    plot->add_option("--out", cfg.out, "Output SVG (stdout when absent)");

    std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) return app.exit(e, out, err);
      err << "error: " << e.what() << "\n";
      return kExitValidation;
    }
    return selected(cfg, out);
  } catch (const CliError& e) {
    err << "error: " << e.what() << "\n";
    return e.code();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace qprobe::cli
