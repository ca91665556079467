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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <thread>

#include "qprobe/cli.hpp"
#include "qprobe/measures.hpp"

namespace qprobe::cli {

namespace {

constexpr const char* kBaseColumns[] = {"concurrence", "mutual_info", "classical", "discord", "classical_eq20",
                                        "sigma_z"};

struct Readout {
  DensityMatrix ab;
  double sigma_z;
};

Readout readout_at_first_half_period(double x, const ModelConfig& model, double gamma, double dt) {
  const double t1 = std::numbers::pi / (2.0 * model.g);
  if (gamma == 0.0 && model.variant == ModelVariant::secii_qubit) {
    const SecIIClosedForm c = closed_form_secii(x, model.g * t1);
    return {c.rho_ab, expectation(c.rho_c, pauli_z())};
  }
  const DensityMatrix joint0 = initial_joint_state(model, one_param_density(x), ProbePrep::ground);
  const EvolutionResult r = gamma == 0.0
                                ? evolve_unitary(joint0, model, {t1})
                                : integrate_master(joint0, model, NoiseConfig::spontaneous_emission(model, gamma), t1, dt);
  return {qubit_view_ab(model, r.reduced_ab.back()).state, expectation(r.probe.back(), pauli_z())};
}

void append_measures(std::vector<double>& row, const Readout& r) {
  const CorrelationReport rep = correlation_report(r.ab);
  row.insert(row.end(), {rep.concurrence, rep.mutual_info, rep.classical, rep.discord, rep.classical_eq20, r.sigma_z});
}

std::vector<double> sweep_row(double x, const SweepOptions& opts) {
  std::vector<double> row{x};
  append_measures(row, readout_at_first_half_period(x, opts.model, 0.0, opts.dt));
  if (opts.gamma > 0.0) append_measures(row, readout_at_first_half_period(x, opts.model, opts.gamma, opts.dt));
  return row;
}

}  // namespace

std::vector<double> sweep_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw CliError(kExitValidation, "x step must be positive");
  if (!(start <= stop)) throw CliError(kExitValidation, "x start must not exceed x stop");
  for (double v : {start, stop}) {
    if (!(v >= kFamilyMin && v <= kFamilyMax)) throw CliError(kExitValidation, "x out of family domain");
  }
  const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Round to 12 decimals so grid points print as the decimals the user asked for.
    const double v = std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12;
    grid.push_back(std::clamp(v, start, stop));
  }
  return grid;
}

int sweep_threads(int requested, std::size_t work_items) {
  int n = requested;
  if (n <= 0) {
    n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("QPROBE_THREADS"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const long cap = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || cap < 1) {
        throw CliError(kExitValidation, "QPROBE_THREADS must be a positive integer");
      }
      n = static_cast<int>(std::min<long>(n, cap));
    }
  }
  return std::max(1, std::min<int>(n, static_cast<int>(std::max<std::size_t>(1, work_items))));
}

Table run_sweep(const SweepOptions& opts) {
  if (!opts.model.is_secii()) throw CliError(kExitValidation, "sweep supports the secii-qubit and secii-boson models");
  if (!(opts.gamma >= 0.0) || !std::isfinite(opts.gamma)) throw CliError(kExitValidation, "gamma must be >= 0");
  if (!(opts.dt > 0.0) || !std::isfinite(opts.dt)) throw CliError(kExitValidation, "dt must be positive");
  opts.model.validate();

  const std::vector<double> grid = sweep_grid(opts.x_start, opts.x_stop, opts.x_step);
  Table t;
  t.header.push_back("x");
  for (const char* c : kBaseColumns) t.header.push_back(c);
  if (opts.gamma > 0.0) {
    for (const char* c : kBaseColumns) t.header.push_back(std::string(c) + "_noisy");
  }

  t.rows.resize(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        t.rows[i] = sweep_row(grid[i], opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const int n_threads = sweep_threads(opts.threads, grid.size());
  std::vector<std::thread> pool;
  for (int k = 1; k < n_threads; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return t;
}

}  // namespace qprobe::cli
