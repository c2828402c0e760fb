// Copyright 2026 The bellmp Authors
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

#include "bellmp/quantum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"

namespace bellmp {
namespace {

constexpr double kPi = std::numbers::pi;

oracle::Vec4 to_eigen(const TwoQubitState& s) {
  oracle::Vec4 v;
  for (int k = 0; k < 4; ++k) v(k) = s.amp[k];
  return v;
}

TwoQubitState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  TwoQubitState s;
  for (auto& a : s.amp) a = {g(rng), g(rng)};
  const double n = std::sqrt(s.norm_squared());
  for (auto& a : s.amp) a /= n;
  return s;
}

TEST(PhiPlus, Amplitudes) {
  const auto s = make_phi_plus();
  EXPECT_EQ(s.amplitude(0, 0), Complex(0.7071067811865476, 0.0));
  EXPECT_EQ(s.amplitude(1, 1), Complex(0.7071067811865476, 0.0));
  EXPECT_EQ(s.amplitude(0, 1), Complex(0.0, 0.0));
  EXPECT_EQ(s.amplitude(1, 0), Complex(0.0, 0.0));
  EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
  EXPECT_EQ(s.amp[0], s.amp[3]);
}

TEST(ProductState, BigEndianIndex) {
  EXPECT_EQ(make_product_state(1, 0).amp[2], Complex(1.0, 0.0));
  EXPECT_THROW(make_product_state(2, 0), InvalidArgument);
}

TEST(BasisFromAngle, TrineBases) {
  const auto a = basis_from_angle(0.0, "A");
  EXPECT_NEAR(a.ket0[0], 1.0, 1e-15);
  EXPECT_NEAR(a.ket0[1], 0.0, 1e-15);
  EXPECT_NEAR(a.ket1[0], 0.0, 1e-15);
  EXPECT_NEAR(a.ket1[1], -1.0, 1e-15);

  const auto b = basis_from_angle(2.0 * kPi / 3.0, "B");
  EXPECT_NEAR(b.ket0[0], 0.5, 1e-12);
  EXPECT_NEAR(b.ket0[1], std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_NEAR(b.ket1[0], std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_NEAR(b.ket1[1], -0.5, 1e-12);
  EXPECT_EQ(b.label, "B");

  const auto c = basis_from_angle(-2.0 * kPi / 3.0, "C");
  EXPECT_NEAR(c.ket0[0], 0.5, 1e-12);
  EXPECT_NEAR(c.ket0[1], -std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_NEAR(c.ket1[0], -std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_NEAR(c.ket1[1], -0.5, 1e-12);
}

TEST(BasisFromAngle, OrthonormalOnGrid) {
  for (int k = 0; k < 720; ++k) {
    const auto b = basis_from_angle(-2.0 * kPi + k * kPi / 180.0, "");
    EXPECT_NEAR(b.ket0[0] * b.ket1[0] + b.ket0[1] * b.ket1[1], 0.0, 1e-12);
    EXPECT_NEAR(b.ket0[0] * b.ket0[0] + b.ket0[1] * b.ket0[1], 1.0, 1e-12);
    EXPECT_NEAR(b.ket1[0] * b.ket1[0] + b.ket1[1] * b.ket1[1], 1.0, 1e-12);
  }
}

TEST(BasisFromAngle, RejectsNonFinite) {
  EXPECT_THROW(basis_from_angle(std::nan(""), "x"), InvalidArgument);
  EXPECT_THROW(basis_from_angle(INFINITY, "x"), InvalidArgument);
}

TEST(JointDistribution, PhiPlusAB) {
  const auto [a, b, c] = trine_bases();
  const auto d = joint_distribution(make_phi_plus(), a, b);
  EXPECT_NEAR(d.p[0][0], 1.0 / 8.0, 1e-12);
  EXPECT_NEAR(d.p[1][1], 1.0 / 8.0, 1e-12);
  EXPECT_NEAR(d.p[0][1], 3.0 / 8.0, 1e-12);
  EXPECT_NEAR(d.p[1][0], 3.0 / 8.0, 1e-12);
  EXPECT_EQ(d.settings.first, "A");
  EXPECT_EQ(d.settings.second, "B");
}

TEST(JointDistribution, PhiPlusSameBasis) {
  const auto a = basis_from_angle(0.0, "A");
  const auto d = joint_distribution(make_phi_plus(), a, a);
  EXPECT_NEAR(d.p[0][0], 0.5, 1e-12);
  EXPECT_NEAR(d.p[1][1], 0.5, 1e-12);
  EXPECT_NEAR(d.p[0][1], 0.0, 1e-12);
  EXPECT_NEAR(d.p[1][0], 0.0, 1e-12);
}

TEST(JointDistribution, ProductState) {
  const auto a = basis_from_angle(0.0, "A");
  const auto d = joint_distribution(make_product_state(0, 0), a, a);
  EXPECT_DOUBLE_EQ(d.p[0][0], 1.0);
  EXPECT_DOUBLE_EQ(d.p[0][1] + d.p[1][0] + d.p[1][1], 0.0);
}

TEST(JointDistribution, RejectsUnnormalizedState) {
  TwoQubitState s = make_phi_plus();
  s.amp[0] *= 1.001;
  const auto a = basis_from_angle(0.0, "A");
  EXPECT_THROW(joint_distribution(s, a, a), InvalidState);
  EXPECT_THROW(p_same(TwoQubitState{}, a, a), InvalidState);

  // Deviations inside the 1e-9 gate are accepted.
  s = make_phi_plus();
  s.amp[0] *= 1.0 + 1e-10;
  EXPECT_NO_THROW(joint_distribution(s, a, a));
}

TEST(JointDistribution, MatchesProjectorOracleOnRandomStates) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int trial = 0; trial < 500; ++trial) {
    const TwoQubitState s = random_state(rng);
    const double t1 = angle(rng);
    const double t2 = angle(rng);
    const auto d = joint_distribution(s, basis_from_angle(t1, ""), basis_from_angle(t2, ""));
    double total = 0.0;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        EXPECT_GE(d.p[x][y], 0.0);
        EXPECT_NEAR(d.p[x][y], oracle::born(to_eigen(s), t1, x, t2, y), 1e-12);
        total += d.p[x][y];
      }
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(PSame, TrineValues) {
  const auto [a, b, c] = trine_bases();
  const auto phi = make_phi_plus();
  EXPECT_NEAR(p_same(phi, a, b), 0.25, 1e-12);
  EXPECT_NEAR(p_same(phi, b, b), 1.0, 1e-12);
}

TEST(PSame, AngleLawOnGrid) {
  const auto phi = make_phi_plus();
  for (int i = 0; i < 100; ++i) {
    const double t1 = -kPi + 2.0 * kPi * i / 100.0;
    const auto b1 = basis_from_angle(t1, "");
    for (int j = 0; j < 100; ++j) {
      const double t2 = -kPi + 2.0 * kPi * j / 100.0 + 0.013;
      const auto b2 = basis_from_angle(t2, "");
      const double ps = p_same(phi, b1, b2);
      EXPECT_NEAR(ps, oracle::cos2_law(t1, t2), 1e-10);
      EXPECT_NEAR(ps, oracle::born(oracle::phi_plus(), t1, 0, t2, 0) +
                          oracle::born(oracle::phi_plus(), t1, 1, t2, 1), 1e-10);
      EXPECT_NEAR(ps, p_same(phi, b2, b1), 1e-12);
    }
  }
}

TEST(PSame, PerfectCorrelationOn360Grid) {
  const auto phi = make_phi_plus();
  for (int k = 0; k < 360; ++k) {
    const auto b = basis_from_angle(k * kPi / 180.0, "");
    EXPECT_NEAR(p_same(phi, b, b), 1.0, 1e-12) << "theta = " << k << " deg";
  }
}

TEST(BellRecord, TrineViolation) {
  const auto [a, b, c] = trine_bases();
  const auto r = bell_record(make_phi_plus(), a, b, c);
  EXPECT_NEAR(r.p_same_ab, 0.25, 1e-12);
  EXPECT_NEAR(r.p_same_ac, 0.25, 1e-12);
  EXPECT_NEAR(r.p_same_bc, 0.25, 1e-12);
  EXPECT_NEAR(r.bell_sum, 0.75, 1e-12);
  EXPECT_NEAR(r.bell_sum, r.p_same_ab + r.p_same_ac + r.p_same_bc, 1e-12);
}

TEST(BellRecord, IdenticalAndOppositeSettings) {
  const auto phi = make_phi_plus();
  const auto a = basis_from_angle(0.0, "A");
  const auto r = bell_record(phi, a, a, a);
  EXPECT_NEAR(r.bell_sum, 3.0, 1e-12);

  const auto pi = basis_from_angle(kPi, "");
  const auto s = bell_record(phi, a, pi, pi);
  EXPECT_NEAR(s.p_same_ab, 0.0, 1e-12);
  EXPECT_NEAR(s.p_same_ac, 0.0, 1e-12);
  EXPECT_NEAR(s.p_same_bc, 1.0, 1e-12);
  EXPECT_NEAR(s.bell_sum, 1.0, 1e-12);
}

TEST(SchmidtInvariance, PhiPlusInEveryEquatorialBasis) {
  const auto phi = make_phi_plus();
  EXPECT_TRUE(verify_schmidt_invariance(phi, trine_bases()[1]));
  for (int k = 0; k < 360; ++k) {
    EXPECT_TRUE(verify_schmidt_invariance(phi, basis_from_angle(k * kPi / 180.0, "")));
  }
}

TEST(SchmidtInvariance, GlobalPhaseIgnored) {
  TwoQubitState s = make_phi_plus();
  for (auto& a : s.amp) a *= std::polar(1.0, 0.7);
  EXPECT_TRUE(verify_schmidt_invariance(s, trine_bases()[2]));
}

TEST(SchmidtInvariance, OtherStatesFail) {
  EXPECT_FALSE(verify_schmidt_invariance(make_product_state(0, 0), trine_bases()[1]));
  TwoQubitState phi_minus = make_phi_plus();
  phi_minus.amp[3] = -phi_minus.amp[3];
  EXPECT_FALSE(verify_schmidt_invariance(phi_minus, trine_bases()[0]));
  EXPECT_FALSE(verify_schmidt_invariance(make_product_state(0, 1), trine_bases()[0]));
}

}  // namespace
}  // namespace bellmp
