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

#ifndef QPROBE_TOOLS_CLI_HPP_
#define QPROBE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qprobe/dynamics.hpp"

namespace qprobe::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitValidation = 2,
  kExitIo = 3,
  kExitDataShape = 4,
};

class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

/// Runs the tool on `args` (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// ---- Configuration ---------------------------------------------------------

/// Expands `--config path` into flag tokens placed ahead of the remaining
/// arguments, so explicit flags win. args[0] must be the subcommand.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

/// Same, with the JSON document given as text.
std::vector<std::string> config_tokens(const std::string& json_text);

// ---- Tables ----------------------------------------------------------------

/// 12 significant digits, '.' separator, no negative zero.
std::string format_number(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Column position; throws CliError(kExitDataShape) naming the column.
  std::size_t column(const std::string& name) const;
};

std::string to_csv(const Table& t);
/// Throws CliError(kExitDataShape) on ragged, empty or non-numeric input.
Table parse_csv(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// ---- Plots -----------------------------------------------------------------

/// SVG 1.1 line plot of `columns` against the first column.
std::string render_svg(const Table& t, const std::vector<std::string>& columns, const std::string& title);

// ---- Sweep -----------------------------------------------------------------

struct SweepOptions {
  double x_start = 0.5;
  double x_stop = 1.0;
  double x_step = 0.01;
  double gamma = 0.1;
  ModelConfig model{ModelVariant::secii_qubit};
  double dt = kDefaultDt;
  int threads = 0;  // 0: QPROBE_THREADS or available parallelism
};

/// Grid points start, start + step, ... up to stop (inclusive within 1e-9·step).
std::vector<double> sweep_grid(double start, double stop, double step);

/// One row per grid point; noisy columns are appended when gamma > 0.
Table run_sweep(const SweepOptions& opts);

/// Worker count honoring QPROBE_THREADS.
int sweep_threads(int requested, std::size_t work_items);

}  // namespace qprobe::cli

#endif  // QPROBE_TOOLS_CLI_HPP_
