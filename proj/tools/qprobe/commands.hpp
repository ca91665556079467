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

// Subcommand bodies. Flags are parsed in cli.cpp into RunConfig.

#ifndef QPROBE_TOOLS_COMMANDS_HPP_
#define QPROBE_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qprobe/cli.hpp"

namespace qprobe::cli {

struct RunConfig {
  std::optional<double> x;
  double x_start = 0.5;
  double x_stop = 1.0;
  double x_step = 0.01;
  std::optional<double> gamma;
  double g = 1.0;
  double delta = 10.0;
  int nmax = 2;
  std::optional<std::string> model;
  std::optional<double> t_end;
  double dt = kDefaultDt;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::string out;
  bool emit_svg = false;
  bool report_tm = false;
  int cycles = 1;
  int n = 1;
  int samples = 101;
  std::string probe;
  std::string csv;
  std::vector<std::string> columns;
  std::string title;
};

int cmd_measures(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_evolve(const RunConfig& cfg, std::ostream& out);
int cmd_probe(const RunConfig& cfg, std::ostream& out);
int cmd_qnd(const RunConfig& cfg, std::ostream& out);
int cmd_plot(const RunConfig& cfg, std::ostream& out);

}  // namespace qprobe::cli

#endif  // QPROBE_TOOLS_COMMANDS_HPP_
