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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qprobe/states.hpp"

namespace qprobe {
namespace {

TEST(OneParamStateTest, Domain) {
  EXPECT_NO_THROW(OneParamState(0.5));
  EXPECT_NO_THROW(OneParamState(1.0));
  for (double bad : {0.49999, 1.00001, 0.3, std::nan("")}) {
    try {
      OneParamState s(bad);
      FAIL() << "accepted x = " << bad;
    } catch (const std::invalid_argument& e) {
      EXPECT_STREQ(e.what(), "x out of family domain");
    }
  }
  EXPECT_THROW(one_param_density(0.3), std::invalid_argument);
}

TEST(OneParamStateTest, WeightsSumToOne) {
  for (int i = 0; i <= 100; ++i) {
    const OneParamState s(0.5 + 0.005 * i);
    EXPECT_GE(s.antisymmetric_weight(), 0.0);
    EXPECT_NEAR(s.symmetric_weight() + s.antisymmetric_weight() + s.corner_weight(), 1.0, 1e-15);
  }
}

TEST(OneParamDensityTest, Examples) {
  const DensityMatrix one = one_param_density(1.0);
  EXPECT_NEAR(one(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(one(2, 2).real(), 0.5, 1e-15);
  EXPECT_NEAR(one(1, 2).real(), -0.5, 1e-15);
  EXPECT_NEAR(one(3, 3).real(), 0.0, 1e-15);

  const DensityMatrix third = one_param_density(2.0 / 3.0);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(third(i, i).real(), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(third(0, 0).real(), 0.0, 0.0);
  EXPECT_NEAR(std::abs(third(1, 2)), 0.0, 1e-15);

  const DensityMatrix half = one_param_density(0.5);
  EXPECT_NEAR(half(1, 1).real(), 0.25, 1e-15);
  EXPECT_NEAR(half(2, 2).real(), 0.25, 1e-15);
  EXPECT_NEAR(half(3, 3).real(), 0.5, 1e-15);
  EXPECT_NEAR(half(1, 2).real(), 0.25, 1e-15);
  EXPECT_NEAR(half(2, 1).real(), 0.25, 1e-15);
}

TEST(OneParamDensityTest, BellDecompositionOnGrid) {
  for (int i = 0; i <= 100; ++i) {
    const double x = 0.5 + 0.005 * i;
    EXPECT_LE(max_abs(one_param_density(x).matrix() - oracle::family_from_bell_weights(x)), 1e-12) << x;
  }
}

TEST(CornerSwapTest, Examples) {
  const DensityMatrix s = corner_swap(one_param_density(0.75));
  EXPECT_NEAR(s(0, 0).real(), 0.25, 1e-15);
  EXPECT_NEAR(s(1, 1).real(), 0.375, 1e-15);
  EXPECT_NEAR(s(2, 2).real(), 0.375, 1e-15);
  EXPECT_NEAR(s(3, 3).real(), 0.0, 1e-15);
  EXPECT_NEAR(s(1, 2).real(), -0.125, 1e-15);

  std::mt19937_64 rng(6);
  const DensityMatrix r(two_qubit_space(), oracle::random_density(4, rng));
  EXPECT_LE(max_abs(corner_swap(corner_swap(r)).matrix() - r.matrix()), 1e-15);

  const DensityMatrix mixed(two_qubit_space(), identity(4) / 4.0);
  EXPECT_LE(max_abs(corner_swap(mixed).matrix() - mixed.matrix()), 0.0);
  EXPECT_THROW(corner_swap(DensityMatrix(probe_space(), identity(2) / 2.0)), std::invalid_argument);
}

TEST(CornerSwapTest, PreservesSpectrum) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix r(two_qubit_space(), oracle::random_density(4, rng));
    const RealVector a = hermitian_eigen(r.matrix()).values;
    const RealVector b = hermitian_eigen(corner_swap(r).matrix()).values;
    EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(JoinWithProbeTest, Examples) {
  const DensityMatrix g = join_with_probe(one_param_density(1.0), ProbePrep::ground);
  EXPECT_EQ(g.dim(), 8);
  EXPECT_EQ(g.space().labels().back(), "C");
  const DensityMatrix pc = partial_trace(g, {2});
  EXPECT_NEAR(pc(1, 1).real(), 1.0, 1e-15);  // (|e>, |g>) order

  const DensityMatrix e = join_with_probe(one_param_density(0.75), ProbePrep::excited);
  EXPECT_NEAR(e.matrix().trace().real(), 1.0, 1e-15);
  EXPECT_LE(max_abs(partial_trace(e, {0, 1}).matrix() - one_param_density(0.75).matrix()), 1e-15);
  EXPECT_NEAR(partial_trace(e, {2})(0, 0).real(), 1.0, 1e-15);

  for (double x : {0.5, 0.6, 0.75, 0.9}) {
    EXPECT_NEAR(entropy_bits(join_with_probe(one_param_density(x), ProbePrep::excited)),
                entropy_bits(one_param_density(x)), 1e-12);
  }
}

TEST(ProbeStateTest, BasisOrder) {
  EXPECT_NEAR(probe_state(ProbePrep::excited)(0, 0).real(), 1.0, 0.0);
  EXPECT_NEAR(probe_state(ProbePrep::ground)(1, 1).real(), 1.0, 0.0);
  EXPECT_EQ(to_string(ProbePrep::ground), "ground");
  EXPECT_EQ(to_string(ProbePrep::excited), "excited");
}

TEST(ExtractXStateTest, Examples) {
  const XState half = extract_xstate(one_param_density(0.5));
  EXPECT_NEAR(half.r11, 0.0, 1e-15);
  EXPECT_NEAR(half.r22, 0.25, 1e-15);
  EXPECT_NEAR(half.r33, 0.25, 1e-15);
  EXPECT_NEAR(half.r44, 0.5, 1e-15);
  EXPECT_NEAR(half.r23, 0.25, 1e-15);

  const XState third = extract_xstate(one_param_density(2.0 / 3.0));
  EXPECT_NEAR(third.r22, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(third.r44, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(third.r23, 0.0, 1e-15);
}

TEST(ExtractXStateTest, RejectsOffPatternEntries) {
  Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  try {
    extract_xstate(DensityMatrix::pure(two_qubit_space(), phi));
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "not an X-state of Eq. 14 type");
  }
  // Complex (2,3) coherence.
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(1) = 1.0 / std::sqrt(2.0);
  psi(2) = Complex(0.0, 1.0 / std::sqrt(2.0));
  EXPECT_THROW(extract_xstate(DensityMatrix::pure(two_qubit_space(), psi)), std::invalid_argument);
}

TEST(ExtractXStateTest, RoundTripOnRandomXStates) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const oracle::RandomX r = oracle::random_xstate(rng, trial % 2 == 0);
    const XState xs{r.r11, r.r22, r.r33, r.r44, r.r23};
    EXPECT_NO_THROW(xs.validate());
    const XState back = extract_xstate(xs.to_density());
    EXPECT_NEAR(back.r11, xs.r11, 1e-12);
    EXPECT_NEAR(back.r22, xs.r22, 1e-12);
    EXPECT_NEAR(back.r33, xs.r33, 1e-12);
    EXPECT_NEAR(back.r44, xs.r44, 1e-12);
    EXPECT_NEAR(back.r23, xs.r23, 1e-12);
    EXPECT_EQ(xs.symmetric(), trial % 2 == 0);
  }
}

TEST(XStateTest, ValidationFailures) {
  EXPECT_THROW((XState{0.0, 0.5, 0.5, 0.1, 0.0}.validate()), std::invalid_argument);
  EXPECT_THROW((XState{0.0, 0.25, 0.25, 0.5, 0.3}.validate()), std::invalid_argument);
  EXPECT_THROW((XState{-0.1, 0.3, 0.3, 0.5, 0.0}.validate()), std::invalid_argument);
}

}  // namespace
}  // namespace qprobe
