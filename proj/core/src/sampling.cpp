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
#include <cmath>
#include <stdexcept>

#include "qprobe/protocols.hpp"

namespace qprobe {

namespace {

constexpr int kBisectionIterations = 200;

// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform in [0, 1) from the counter (seed, stream, index).
double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  const std::uint64_t h = mix64(mix64(mix64(seed) ^ stream) ^ index);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

struct AffineReadout {
  double offset;
  double slope;
};

AffineReadout affine(ReadoutMap map) {
  switch (map) {
    case ReadoutMap::secii_probe:
    case ReadoutMap::seciii_stage_g:
      return {2.0, -2.0};
    case ReadoutMap::seciii_stage_e:
      return {-1.0, 2.0};
  }
  throw std::invalid_argument("unknown readout map");
}

// d/dx of the pooled log-likelihood; decreasing in x.
double score(std::span<const ReadoutGroup> groups, double x) {
  double s = 0.0;
  for (const ReadoutGroup& g : groups) {
    if (g.shots == 0) continue;
    const AffineReadout r = affine(g.map);
    const double p = std::clamp(r.offset + r.slope * x, 1e-300, 1.0 - 1e-16);
    const double n = static_cast<double>(g.shots);
    s += n * r.slope * (g.frequency / p - (1.0 - g.frequency) / (1.0 - p));
  }
  return s;
}

double maximum_likelihood_x(std::span<const ReadoutGroup> groups) {
  double lo = kFamilyMin;
  double hi = kFamilyMax;
  for (int i = 0; i < kBisectionIterations && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (score(groups, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Boundary optima: the score keeps its sign across the whole interval.
  if (lo == kFamilyMin && score(groups, std::nextafter(kFamilyMin, 1.0)) <= 0.0) return kFamilyMin;
  if (hi == kFamilyMax && score(groups, std::nextafter(kFamilyMax, 0.0)) >= 0.0) return kFamilyMax;
  return 0.5 * (lo + hi);
}

std::uint64_t total_shots(std::span<const ReadoutGroup> groups) {
  std::uint64_t n = 0;
  for (const ReadoutGroup& g : groups) {
    if (!(g.frequency >= 0.0 && g.frequency <= 1.0)) throw std::invalid_argument("group frequency outside [0, 1]");
    n += g.shots;
  }
  return n;
}

}  // namespace

ShotRecord sample_shots(double p_excited, std::uint64_t shots, std::uint64_t seed, std::uint64_t stream) {
  if (!(p_excited >= 0.0 && p_excited <= 1.0)) throw std::invalid_argument("probability outside [0, 1]");
  ShotRecord r{shots, 0, seed, stream};
  for (std::uint64_t i = 0; i < shots; ++i) {
    if (counter_uniform(seed, stream, i) < p_excited) ++r.count_excited;
  }
  return r;
}

double readout_probability(ReadoutMap map, double x) {
  OneParamState validated(x);
  const AffineReadout r = affine(map);
  return std::clamp(r.offset + r.slope * x, 0.0, 1.0);
}

XEstimate estimate_from_counts(std::span<const ReadoutGroup> groups) {
  if (total_shots(groups) == 0) throw std::invalid_argument("zero shots");
  XEstimate e;
  e.x_hat = maximum_likelihood_x(groups);

  double information = 0.0;
  for (const ReadoutGroup& g : groups) {
    if (g.shots == 0) continue;
    const double n = static_cast<double>(g.shots);
    const AffineReadout r = affine(g.map);
    const double floor = 0.5 / n;
    const double p = std::clamp(r.offset + r.slope * e.x_hat, floor, 1.0 - floor);
    information += n * r.slope * r.slope / (p * (1.0 - p));
  }
  e.standard_error = 1.0 / std::sqrt(information);
  e.ci99 = {std::clamp(e.x_hat - kZ995 * e.standard_error, kFamilyMin, kFamilyMax),
            std::clamp(e.x_hat + kZ995 * e.standard_error, kFamilyMin, kFamilyMax)};
  e.derived = correlation_report(one_param_density(e.x_hat));
  return e;
}

XEstimate estimate_exact(std::span<const ReadoutGroup> groups) {
  if (groups.empty()) throw std::invalid_argument("zero shots");
  std::vector<ReadoutGroup> weighted(groups.begin(), groups.end());
  for (ReadoutGroup& g : weighted) g.shots = 1;
  total_shots(weighted);
  XEstimate e;
  e.x_hat = maximum_likelihood_x(weighted);
  e.standard_error = 0.0;
  e.ci99 = {e.x_hat, e.x_hat};
  e.derived = correlation_report(one_param_density(e.x_hat));
  return e;
}

}  // namespace qprobe
