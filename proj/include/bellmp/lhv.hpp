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

#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "bellmp/common.hpp"

namespace bellmp {

/// Pre-assigned values (a, b, c) of properties A, B, C, shared by both
/// objects.
struct PropertyTriplet {
  Bit a = 0;
  Bit b = 0;
  Bit c = 0;

  Bit value(Setting s) const;

  /// [a=b] + [a=c] + [b=c]; never below 1 for three bits.
  int agreeing_pairs() const;

  /// Three-character code such as "001".
  std::string code() const;
  static PropertyTriplet from_code(std::string_view code);

  auto operator<=>(const PropertyTriplet&) const = default;
};

using TripletWeights = std::map<PropertyTriplet, double>;

enum class Object : std::uint8_t { First = 0, Second = 1 };

/// P_i(x | X, lambda) for both objects at one value of lambda.
struct ResponseTable {
  // probs[object][setting][outcome]
  std::array<std::array<std::array<double, 2>, 3>, 2> probs{};

  double at(Object object, Setting setting, Bit outcome) const {
    return probs[static_cast<std::size_t>(object)][index_of(setting)][outcome];
  }
  double& at(Object object, Setting setting, Bit outcome) {
    return probs[static_cast<std::size_t>(object)][index_of(setting)][outcome];
  }

  /// Both objects carry the triplet's values with certainty.
  static ResponseTable deterministic(const PropertyTriplet& t);

  bool operator==(const ResponseTable&) const = default;
};

struct HiddenState {
  std::string id;
  double weight = 0.0;
  ResponseTable response;

  bool operator==(const HiddenState&) const = default;
};

/// A Bell-local hidden variable model over a finite set of lambda values.
/// Joint outcome probabilities factorize per lambda by construction.
struct LhvModel {
  std::vector<HiddenState> lambdas;

  bool operator==(const LhvModel&) const = default;
};

/// Throws InvalidDistribution naming the offending entry if weights are
/// negative, non-finite or do not sum to 1 (within 1e-9), if any response
/// entry leaves [0, 1], if an outcome pair does not sum to 1, or if ids are
/// empty or repeated.
void validate_model(const LhvModel& model);

/// Throws InvalidDistribution unless all weights are finite, non-negative,
/// and sum to 1 within 1e-9.
void validate_triplet_weights(const TripletWeights& weights);

bool is_supported(const HiddenState& h);

struct HypothesisFlags {
  bool counterfactual_definite = false;  // (A)
  std::string einstein_local;            // (B), not decidable from a table
  bool hidden_variable = false;          // (A')
  bool bell_local = false;               // (B')
  bool perfect_correlations = false;
  // Assumptions about the experimenter rather than the model; always true.
  bool no_superdeterminism = true;       // (C)
  bool measurement_independence = true;  // (D)
};

/// All 8 triplets in lexicographic order, (0,0,0) first.
std::array<PropertyTriplet, 8> enumerate_deterministic_strategies();

LhvModel model_from_triplet_distribution(const TripletWeights& weights);

/// sum over lambda of P1(x|X,lambda) P2(x'|X',lambda) p(lambda)
double joint_probability(const LhvModel& model, Setting first, Setting second, Bit x1, Bit x2);

double lhv_p_same(const LhvModel& model, Setting first, Setting second);

CorrelationRecord lhv_bell_record(const LhvModel& model);

/// P(x, x' | X, X', lambda) for every lambda, setting pair and outcome pair.
struct LambdaJointTable {
  // p[X][X'][x][x']
  std::array<std::array<std::array<std::array<double, 2>, 2>, 3>, 3> p{};
};
using JointTable = std::vector<LambdaJointTable>;

/// The joint table generated by the model's own response tables.
JointTable build_joint_table(const LhvModel& model);

/// True iff every entry of `joint` equals P1(x|X,lambda) P2(x'|X',lambda)
/// of `model` within 1e-10. Tables of the wrong size do not factorize.
bool check_bell_locality(const JointTable& joint, const LhvModel& model);

/// Weighted probability of opposite outcomes when both objects are measured
/// along `setting`, summing both orders (1,0) and (0,1).
double discordance_mass(const LhvModel& model, Setting setting);

bool check_perfect_correlation(const LhvModel& model, Setting setting);

struct DeterminismWitness {
  std::string lambda_id;
  double weight = 0.0;
  Setting setting = Setting::A;
  std::array<double, 2> first{};   // P1(0|X,lambda), P1(1|X,lambda)
  std::array<double, 2> second{};  // P2(0|X,lambda), P2(1|X,lambda)
  bool first_deterministic = false;
  bool second_deterministic = false;
  bool objects_agree = false;

  bool holds() const { return first_deterministic && second_deterministic && objects_agree; }
};

struct DiscordanceViolation {
  Setting setting = Setting::A;
  std::string lambda_id;
  double mass = 0.0;  // p(lambda) * (P1(1)P2(0) + P1(0)P2(1))
};

struct DeterminismReport {
  bool degenerate = false;      // no supported lambda
  bool premises_hold = false;   // perfect correlation on A, B and C
  bool deterministic = false;   // every supported response is 0/1 and shared
  std::vector<DeterminismWitness> witnesses;
  std::vector<DiscordanceViolation> violations;
};

/// Runs the perfect-correlation => determinism argument on `model`. When a
/// setting is not perfectly correlated, the report lists the discordant
/// (setting, lambda) contributions and makes no determinism claim.
DeterminismReport derive_determinism(const LhvModel& model);

HypothesisFlags classify_model(const LhvModel& model);

}  // namespace bellmp
