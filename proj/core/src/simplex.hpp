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

#ifndef QPROBE_SRC_SIMPLEX_HPP_
#define QPROBE_SRC_SIMPLEX_HPP_

#include <array>
#include <functional>

namespace qprobe::detail {

struct SimplexResult {
  std::array<double, 2> point{};
  double value = 0.0;
  int iterations = 0;
};

// Nelder-Mead on two variables. Stops when the spread of vertex values
// drops below `tol` or after `max_iter` iterations.
SimplexResult nelder_mead_2d(const std::function<double(double, double)>& f,
                             std::array<double, 2> start, std::array<double, 2> step,
                             int max_iter, double tol);

}  // namespace qprobe::detail

#endif  // QPROBE_SRC_SIMPLEX_HPP_
