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

#include "bellmp/lhv.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

namespace bellmp {
namespace {

using S = Setting;

TripletWeights point_mass(std::string_view code) { return {{PropertyTriplet::from_code(code), 1.0}}; }

TEST(Strategies, EightInLexicographicOrder) {
  const auto all = enumerate_deterministic_strategies();
  ASSERT_EQ(all.size(), 8u);
  EXPECT_EQ(all.front().code(), "000");
  EXPECT_EQ(all.back().code(), "111");
  for (std::size_t k = 1; k < all.size(); ++k) EXPECT_LT(all[k - 1], all[k]);
  std::set<std::string> codes;
  for (const auto& t : all) {
    codes.insert(t.code());
    EXPECT_GE(t.agreeing_pairs(), 1) << t.code();
  }
  EXPECT_EQ(codes.size(), 8u);
  EXPECT_TRUE(codes.contains("001"));
  EXPECT_TRUE(codes.contains("110"));
}

TEST(Strategies, CodeParsing) {
  EXPECT_EQ(PropertyTriplet::from_code("101"), (PropertyTriplet{1, 0, 1}));
  EXPECT_THROW(PropertyTriplet::from_code("12"), InvalidArgument);
  EXPECT_THROW(PropertyTriplet::from_code("0a1"), InvalidArgument);
}

TEST(ModelFromTriplets, Uniform) {
  const auto m = model_from_triplet_distribution(oracle::uniform8());
  ASSERT_EQ(m.lambdas.size(), 8u);
  for (const auto& h : m.lambdas) {
    EXPECT_DOUBLE_EQ(h.weight, 0.125);
    EXPECT_EQ(h.response.probs[0], h.response.probs[1]);
  }
}

TEST(ModelFromTriplets, CoinExample) {
  const auto m = model_from_triplet_distribution(point_mass("001"));
  ASSERT_EQ(m.lambdas.size(), 1u);
  const auto& r = m.lambdas[0].response;
  EXPECT_EQ(r.at(Object::First, S::A, 0), 1.0);
  EXPECT_EQ(r.at(Object::First, S::C, 1), 1.0);
  EXPECT_EQ(r.at(Object::Second, S::B, 0), 1.0);
}

TEST(ModelFromTriplets, TwoPointMixture) {
  const auto m = model_from_triplet_distribution(
      {{PropertyTriplet::from_code("001"), 0.2}, {PropertyTriplet::from_code("110"), 0.8}});
  ASSERT_EQ(m.lambdas.size(), 2u);
  EXPECT_EQ(m.lambdas[0].id, "001");
  EXPECT_DOUBLE_EQ(m.lambdas[0].weight, 0.2);
  EXPECT_DOUBLE_EQ(m.lambdas[1].weight, 0.8);
}

TEST(ModelFromTriplets, RejectsBadWeights) {
  EXPECT_THROW(model_from_triplet_distribution({{PropertyTriplet{0, 0, 0}, -0.1}, {PropertyTriplet{1, 1, 1}, 1.1}}),
               InvalidDistribution);
  EXPECT_THROW(model_from_triplet_distribution({{PropertyTriplet{0, 0, 0}, 0.5}}), InvalidDistribution);
  EXPECT_THROW(model_from_triplet_distribution({}), InvalidDistribution);
}

TEST(ValidateModel, RejectsMalformedEntries) {
  auto m = model_from_triplet_distribution(oracle::uniform8());
  EXPECT_NO_THROW(validate_model(m));

  auto dup = m;
  dup.lambdas[1].id = dup.lambdas[0].id;
  EXPECT_THROW(validate_model(dup), InvalidDistribution);

  auto bad_pair = m;
  bad_pair.lambdas[2].response.at(Object::Second, S::B, 0) = 0.4;
  try {
    validate_model(bad_pair);
    FAIL() << "expected InvalidDistribution";
  } catch (const InvalidDistribution& e) {
    EXPECT_NE(std::string(e.what()).find("lambdas[2]"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("p2.B"), std::string::npos) << e.what();
  }

  auto out_of_range = m;
  out_of_range.lambdas[0].response.at(Object::First, S::A, 0) = 1.5;
  out_of_range.lambdas[0].response.at(Object::First, S::A, 1) = -0.5;
  EXPECT_THROW(validate_model(out_of_range), InvalidDistribution);

  auto negative = m;
  negative.lambdas[3].weight = -0.1;
  negative.lambdas[4].weight += 0.1 + 0.125;
  EXPECT_THROW(validate_model(negative), InvalidDistribution);
}

TEST(JointProbability, Examples) {
  const auto uniform = model_from_triplet_distribution(oracle::uniform8());
  EXPECT_NEAR(joint_probability(uniform, S::A, S::A, 1, 0), 0.0, 1e-15);
  // Oracle: two of eight triplets have a = 0 and b = 0.
  int count = 0;
  for (const auto& t : enumerate_deterministic_strategies()) count += (t.a == 0 && t.b == 0);
  EXPECT_EQ(count, 2);
  EXPECT_NEAR(joint_probability(uniform, S::A, S::B, 0, 0), count / 8.0, 1e-15);

  const auto coin = model_from_triplet_distribution(point_mass("001"));
  EXPECT_DOUBLE_EQ(joint_probability(coin, S::A, S::C, 0, 1), 1.0);
}

TEST(JointProbability, NormalizedForRandomModels) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = oracle::random_stochastic_model(rng, 1 + trial % 6);
    for (S s1 : kAllSettings) {
      for (S s2 : kAllSettings) {
        double total = 0.0;
        for (Bit x = 0; x < 2; ++x)
          for (Bit y = 0; y < 2; ++y) total += joint_probability(m, s1, s2, x, y);
        EXPECT_NEAR(total, 1.0, 1e-12);
      }
    }
  }
}

TEST(LhvPSame, Examples) {
  const auto uniform = model_from_triplet_distribution(oracle::uniform8());
  EXPECT_NEAR(lhv_p_same(uniform, S::A, S::B), oracle::enumerate_p_same(oracle::uniform8(), S::A, S::B), 1e-15);
  EXPECT_NEAR(lhv_p_same(uniform, S::A, S::B), 0.5, 1e-15);
  EXPECT_DOUBLE_EQ(lhv_p_same(model_from_triplet_distribution(point_mass("010")), S::A, S::B), 0.0);
}

TEST(LhvPSame, SameSettingAlwaysAgrees) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = oracle::random_triplet_weights(rng);
    const auto m = model_from_triplet_distribution(w);
    for (S s : kAllSettings) EXPECT_NEAR(lhv_p_same(m, s, s), 1.0, 1e-12);
    for (S s1 : kAllSettings)
      for (S s2 : kAllSettings) EXPECT_NEAR(lhv_p_same(m, s1, s2), oracle::enumerate_p_same(w, s1, s2), 1e-12);
  }
}

TEST(BellBound, DeterministicExtremes) {
  for (const auto& t : enumerate_deterministic_strategies()) {
    const auto r = lhv_bell_record(model_from_triplet_distribution({{t, 1.0}}));
    EXPECT_DOUBLE_EQ(r.bell_sum, static_cast<double>(t.agreeing_pairs())) << t.code();
    const bool constant = t.code() == "000" || t.code() == "111";
    EXPECT_DOUBLE_EQ(r.bell_sum, constant ? 3.0 : 1.0) << t.code();
  }
}

TEST(BellBound, RandomMixtures) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto r = lhv_bell_record(model_from_triplet_distribution(oracle::random_triplet_weights(rng)));
    ASSERT_GE(r.bell_sum, 1.0 - 1e-12);
  }
}

TEST(BellLocality, OwnTableFactorizes) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = oracle::random_stochastic_model(rng, 4);
    EXPECT_TRUE(check_bell_locality(build_joint_table(m), m));
  }
  const auto det = model_from_triplet_distribution(oracle::uniform8());
  EXPECT_TRUE(check_bell_locality(build_joint_table(det), det));
}

TEST(BellLocality, PerfectlyCorrelatedCoinIsNotAProduct) {
  LhvModel m;
  HiddenState h{"coin", 1.0, {}};
  for (auto& per_object : h.response.probs)
    for (auto& pair : per_object) pair = {0.5, 0.5};
  m.lambdas.push_back(h);
  JointTable table = build_joint_table(m);
  table[0].p[0][0] = {{{0.5, 0.0}, {0.0, 0.5}}};
  EXPECT_FALSE(check_bell_locality(table, m));
}

TEST(BellLocality, SizeMismatch) {
  const auto m = model_from_triplet_distribution(oracle::uniform8());
  JointTable table = build_joint_table(m);
  table.pop_back();
  EXPECT_FALSE(check_bell_locality(table, m));
}

TEST(PerfectCorrelation, TripletModels) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = model_from_triplet_distribution(oracle::random_triplet_weights(rng));
    for (S s : kAllSettings) EXPECT_TRUE(check_perfect_correlation(m, s));
  }
}

TEST(PerfectCorrelation, DiscordantLambda) {
  auto m = model_from_triplet_distribution(point_mass("000"));
  m.lambdas[0].response.at(Object::Second, S::A, 0) = 0.5;
  m.lambdas[0].response.at(Object::Second, S::A, 1) = 0.5;
  EXPECT_FALSE(check_perfect_correlation(m, S::A));
  EXPECT_TRUE(check_perfect_correlation(m, S::B));
}

TEST(PerfectCorrelation, ZeroWeightLambdaIgnored) {
  auto m = model_from_triplet_distribution(point_mass("000"));
  HiddenState bad{"bad", 0.0, ResponseTable::deterministic({0, 0, 0})};
  bad.response.at(Object::Second, S::C, 0) = 0.0;
  bad.response.at(Object::Second, S::C, 1) = 1.0;
  m.lambdas.push_back(bad);
  EXPECT_TRUE(check_perfect_correlation(m, S::C));
  m.lambdas.back().weight = 1e-13;
  EXPECT_TRUE(check_perfect_correlation(m, S::C));
}

TEST(Determinism, TripletModelIsDeterministic) {
  const auto m = model_from_triplet_distribution(oracle::uniform8());
  const auto rep = derive_determinism(m);
  EXPECT_FALSE(rep.degenerate);
  EXPECT_TRUE(rep.premises_hold);
  EXPECT_TRUE(rep.deterministic);
  EXPECT_EQ(rep.witnesses.size(), 8u * 3u);
  EXPECT_TRUE(rep.violations.empty());
}

TEST(Determinism, StochasticModelReportsDiscordance) {
  LhvModel m;
  HiddenState h{"mixed", 1.0, {}};
  for (auto& per_object : h.response.probs)
    for (auto& pair : per_object) pair = {0.3, 0.7};
  m.lambdas.push_back(h);
  const auto rep = derive_determinism(m);
  EXPECT_FALSE(rep.premises_hold);
  EXPECT_FALSE(rep.deterministic);
  EXPECT_TRUE(rep.witnesses.empty());
  ASSERT_EQ(rep.violations.size(), 3u);
  for (const auto& v : rep.violations) EXPECT_NEAR(v.mass, 0.3 * 0.7 * 2.0, 1e-15);
}

TEST(Determinism, EmptySupportIsDegenerate) {
  const auto rep = derive_determinism(LhvModel{});
  EXPECT_TRUE(rep.degenerate);
  EXPECT_TRUE(rep.premises_hold);
  EXPECT_TRUE(rep.deterministic);
  EXPECT_TRUE(rep.witnesses.empty());
}

TEST(Determinism, NamesTheFailingSetting) {
  auto m = model_from_triplet_distribution(point_mass("010"));
  m.lambdas[0].response.at(Object::Second, S::C, 0) = 0.25;
  m.lambdas[0].response.at(Object::Second, S::C, 1) = 0.75;
  const auto rep = derive_determinism(m);
  ASSERT_EQ(rep.violations.size(), 1u);
  EXPECT_EQ(rep.violations[0].setting, S::C);
  EXPECT_NEAR(rep.violations[0].mass, 0.75, 1e-15);
}

TEST(Classify, TripletModel) {
  const auto f = classify_model(model_from_triplet_distribution(oracle::uniform8()));
  EXPECT_TRUE(f.counterfactual_definite);
  EXPECT_TRUE(f.hidden_variable);
  EXPECT_TRUE(f.bell_local);
  EXPECT_TRUE(f.perfect_correlations);
  EXPECT_TRUE(f.no_superdeterminism);
  EXPECT_TRUE(f.measurement_independence);
  EXPECT_FALSE(f.einstein_local.empty());
}

TEST(Classify, StochasticEntryDropsCounterfactualDefiniteness) {
  auto m = model_from_triplet_distribution(point_mass("000"));
  m.lambdas[0].response.at(Object::First, S::B, 0) = 0.5;
  m.lambdas[0].response.at(Object::First, S::B, 1) = 0.5;
  const auto f = classify_model(m);
  EXPECT_FALSE(f.counterfactual_definite);
  EXPECT_TRUE(f.hidden_variable);
}

TEST(Classify, AddedDiscordantLambda) {
  auto m = model_from_triplet_distribution(oracle::uniform8());
  for (auto& h : m.lambdas) h.weight *= 0.9;
  HiddenState odd{"odd", 0.1, ResponseTable::deterministic({0, 0, 0})};
  for (S s : kAllSettings) {
    odd.response.at(Object::Second, s, 0) = 0.0;
    odd.response.at(Object::Second, s, 1) = 1.0;
  }
  m.lambdas.push_back(odd);
  ASSERT_NO_THROW(validate_model(m));
  EXPECT_FALSE(classify_model(m).perfect_correlations);
  for (S s : kAllSettings) EXPECT_NEAR(discordance_mass(m, s), 0.1, 1e-15);
}

TEST(Classify, CounterfactualDefiniteImpliesHiddenVariable) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = classify_model(oracle::random_stochastic_model(rng, 3));
    EXPECT_TRUE(!f.counterfactual_definite || f.hidden_variable);
  }
}

}  // namespace
}  // namespace bellmp
