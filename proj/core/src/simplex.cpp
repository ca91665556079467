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

#include "simplex.hpp"

#include <algorithm>

namespace qprobe::detail {

namespace {

struct Vertex {
  std::array<double, 2> p;
  double f;
};

std::array<double, 2> lerp(const std::array<double, 2>& a, const std::array<double, 2>& b, double t) {
  return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
}

}  // namespace

SimplexResult nelder_mead_2d(const std::function<double(double, double)>& f,
                             std::array<double, 2> start, std::array<double, 2> step,
                             int max_iter, double tol) {
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  auto eval = [&](const std::array<double, 2>& p) { return f(p[0], p[1]); };

  std::array<Vertex, 3> s = {Vertex{start, eval(start)},
                             Vertex{{start[0] + step[0], start[1]}, 0.0},
                             Vertex{{start[0], start[1] + step[1]}, 0.0}};
  s[1].f = eval(s[1].p);
  s[2].f = eval(s[2].p);

  int it = 0;
  for (; it < max_iter; ++it) {
    std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    if (s[2].f - s[0].f <= tol) break;

    const std::array<double, 2> centroid = lerp(s[0].p, s[1].p, 0.5);
    const std::array<double, 2> xr = lerp(centroid, s[2].p, -kReflect);
    const double fr = eval(xr);

    if (fr < s[0].f) {
      const std::array<double, 2> xe = lerp(centroid, s[2].p, -kExpand);
      const double fe = eval(xe);
      s[2] = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
    } else if (fr < s[1].f) {
      s[2] = {xr, fr};
    } else {
      // Outside contraction if the reflection beat the worst vertex, inside otherwise.
      const bool outside = fr < s[2].f;
      const std::array<double, 2> xc =
          outside ? lerp(centroid, xr, kContract) : lerp(centroid, s[2].p, kContract);
      const double fc = eval(xc);
      if (fc < (outside ? fr : s[2].f)) {
        s[2] = {xc, fc};
      } else {
        for (int k = 1; k < 3; ++k) {
          s[k].p = lerp(s[0].p, s[k].p, kShrink);
          s[k].f = eval(s[k].p);
        }
      }
    }
  }
  std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  return {s[0].p, s[0].f, it};
}

}  // namespace qprobe::detail
