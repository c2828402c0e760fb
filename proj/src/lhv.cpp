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

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace bellmp {

Bit PropertyTriplet::value(Setting s) const {
  switch (s) {
    case Setting::A: return a;
    case Setting::B: return b;
    case Setting::C: return c;
  }
  return 0;
}

int PropertyTriplet::agreeing_pairs() const {
  return static_cast<int>(a == b) + static_cast<int>(a == c) + static_cast<int>(b == c);
}

std::string PropertyTriplet::code() const {
  return {static_cast<char>('0' + a), static_cast<char>('0' + b), static_cast<char>('0' + c)};
}

PropertyTriplet PropertyTriplet::from_code(std::string_view code) {
  if (code.size() != 3) throw InvalidArgument("triplet code must have three digits: '" + std::string(code) + "'");
  PropertyTriplet t;
  std::array<Bit*, 3> fields = {&t.a, &t.b, &t.c};
  for (std::size_t i = 0; i < 3; ++i) {
    if (code[i] != '0' && code[i] != '1') {
      throw InvalidArgument("triplet code must contain only 0 and 1: '" + std::string(code) + "'");
    }
    *fields[i] = static_cast<Bit>(code[i] - '0');
  }
  return t;
}

ResponseTable ResponseTable::deterministic(const PropertyTriplet& t) {
  ResponseTable table;
  for (auto object : {Object::First, Object::Second}) {
    for (Setting s : kAllSettings) {
      const Bit v = t.value(s);
      table.at(object, s, v) = 1.0;
      table.at(object, s, static_cast<Bit>(1 - v)) = 0.0;
    }
  }
  return table;
}

namespace {

std::string entry_name(std::size_t i, const HiddenState& h) {
  std::ostringstream os;
  os << "lambdas[" << i << "] (id \"" << h.id << "\")";
  return os.str();
}

std::string number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// P1(x|X) P2(x'|X') at one lambda.
double product(const ResponseTable& r, Setting first, Setting second, Bit x1, Bit x2) {
  return r.at(Object::First, first, x1) * r.at(Object::Second, second, x2);
}

double discordance_at(const ResponseTable& r, Setting s) {
  return product(r, s, s, 1, 0) + product(r, s, s, 0, 1);
}

bool is_zero_or_one(double p) {
  return std::abs(p) <= kDeterminismTolerance || std::abs(p - 1.0) <= kDeterminismTolerance;
}

}  // namespace

void validate_model(const LhvModel& model) {
  double total = 0.0;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < model.lambdas.size(); ++i) {
    const HiddenState& h = model.lambdas[i];
    const std::string name = entry_name(i, h);
    if (h.id.empty()) throw InvalidDistribution(name + ": id must not be empty");
    if (!seen.insert(h.id).second) throw InvalidDistribution(name + ": duplicate id");
    if (!std::isfinite(h.weight)) throw InvalidDistribution(name + ": weight is not finite");
    if (h.weight < 0.0) throw InvalidDistribution(name + ": weight " + number(h.weight) + " is negative");
    total += h.weight;
    for (auto object : {Object::First, Object::Second}) {
      const char* obj = object == Object::First ? "p1" : "p2";
      for (Setting s : kAllSettings) {
        const double p0 = h.response.at(object, s, 0);
        const double p1 = h.response.at(object, s, 1);
        const std::string where = name + "." + obj + "." + setting_name(s);
        if (!std::isfinite(p0) || !std::isfinite(p1) || p0 < 0.0 || p0 > 1.0 || p1 < 0.0 || p1 > 1.0) {
          throw InvalidDistribution(where + ": probabilities must lie in [0, 1]");
        }
        if (std::abs(p0 + p1 - 1.0) > kProbabilityTolerance) {
          throw InvalidDistribution(where + ": outcome probabilities sum to " + number(p0 + p1));
        }
      }
    }
  }
  if (std::abs(total - 1.0) > kNormalizationGate) {
    throw InvalidDistribution("lambda weights sum to " + number(total) + ", expected 1");
  }
}

void validate_triplet_weights(const TripletWeights& weights) {
  double total = 0.0;
  for (const auto& [t, w] : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidDistribution("triplet " + t.code() + ": weight " + number(w) + " is not a probability");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kNormalizationGate) {
    throw InvalidDistribution("triplet weights sum to " + number(total) + ", expected 1");
  }
}

bool is_supported(const HiddenState& h) { return h.weight > kSupportThreshold; }

std::array<PropertyTriplet, 8> enumerate_deterministic_strategies() {
  std::array<PropertyTriplet, 8> out{};
  for (unsigned k = 0; k < 8; ++k) {
    out[k] = {static_cast<Bit>((k >> 2) & 1u), static_cast<Bit>((k >> 1) & 1u),
              static_cast<Bit>(k & 1u)};
  }
  return out;
}

LhvModel model_from_triplet_distribution(const TripletWeights& weights) {
  validate_triplet_weights(weights);
  LhvModel model;
  model.lambdas.reserve(weights.size());
  for (const auto& [t, w] : weights) {
    model.lambdas.push_back({t.code(), w, ResponseTable::deterministic(t)});
  }
  return model;
}

double joint_probability(const LhvModel& model, Setting first, Setting second, Bit x1, Bit x2) {
  double total = 0.0;
  for (const HiddenState& h : model.lambdas) total += product(h.response, first, second, x1, x2) * h.weight;
  return total;
}

double lhv_p_same(const LhvModel& model, Setting first, Setting second) {
  return joint_probability(model, first, second, 0, 0) + joint_probability(model, first, second, 1, 1);
}

CorrelationRecord lhv_bell_record(const LhvModel& model) {
  return CorrelationRecord::from_pairs(lhv_p_same(model, Setting::A, Setting::B),
                                       lhv_p_same(model, Setting::A, Setting::C),
                                       lhv_p_same(model, Setting::B, Setting::C));
}

JointTable build_joint_table(const LhvModel& model) {
  JointTable table(model.lambdas.size());
  for (std::size_t l = 0; l < model.lambdas.size(); ++l) {
    const ResponseTable& r = model.lambdas[l].response;
    for (Setting s1 : kAllSettings) {
      for (Setting s2 : kAllSettings) {
        for (Bit x1 = 0; x1 < 2; ++x1) {
          for (Bit x2 = 0; x2 < 2; ++x2) {
            table[l].p[index_of(s1)][index_of(s2)][x1][x2] = product(r, s1, s2, x1, x2);
          }
        }
      }
    }
  }
  return table;
}

bool check_bell_locality(const JointTable& joint, const LhvModel& model) {
  if (joint.size() != model.lambdas.size()) return false;
  for (std::size_t l = 0; l < joint.size(); ++l) {
    const ResponseTable& r = model.lambdas[l].response;
    for (Setting s1 : kAllSettings) {
      for (Setting s2 : kAllSettings) {
        for (Bit x1 = 0; x1 < 2; ++x1) {
          for (Bit x2 = 0; x2 < 2; ++x2) {
            const double entry = joint[l].p[index_of(s1)][index_of(s2)][x1][x2];
            if (!(std::abs(entry - product(r, s1, s2, x1, x2)) <= kFactorizationTolerance)) return false;
          }
        }
      }
    }
  }
  return true;
}

double discordance_mass(const LhvModel& model, Setting setting) {
  double total = 0.0;
  for (const HiddenState& h : model.lambdas) {
    if (is_supported(h)) total += h.weight * discordance_at(h.response, setting);
  }
  return total;
}

bool check_perfect_correlation(const LhvModel& model, Setting setting) {
  double ten = 0.0;  // x = 1, x' = 0
  double one = 0.0;  // x = 0, x' = 1
  for (const HiddenState& h : model.lambdas) {
    if (!is_supported(h)) continue;
    ten += h.weight * product(h.response, setting, setting, 1, 0);
    one += h.weight * product(h.response, setting, setting, 0, 1);
  }
  return ten <= kProbabilityTolerance && one <= kProbabilityTolerance;
}

DeterminismReport derive_determinism(const LhvModel& model) {
  DeterminismReport report;
  report.degenerate = std::none_of(model.lambdas.begin(), model.lambdas.end(), is_supported);

  report.premises_hold = true;
  for (Setting s : kAllSettings) {
    if (check_perfect_correlation(model, s)) continue;
    report.premises_hold = false;
    for (const HiddenState& h : model.lambdas) {
      if (!is_supported(h)) continue;
      const double mass = h.weight * discordance_at(h.response, s);
      if (mass > 0.0) report.violations.push_back({s, h.id, mass});
    }
  }
  if (!report.premises_hold) return report;

  // With every weighted discordance term zero, each supported lambda needs
  // P1(1|X) P2(0|X) = 0 and P1(0|X) P2(1|X) = 0, which forces both responses
  // to the same 0/1 value.
  report.deterministic = true;
  for (const HiddenState& h : model.lambdas) {
    if (!is_supported(h)) continue;
    for (Setting s : kAllSettings) {
      DeterminismWitness w;
      w.lambda_id = h.id;
      w.weight = h.weight;
      w.setting = s;
      w.first = {h.response.at(Object::First, s, 0), h.response.at(Object::First, s, 1)};
      w.second = {h.response.at(Object::Second, s, 0), h.response.at(Object::Second, s, 1)};
      w.first_deterministic = is_zero_or_one(w.first[0]) && is_zero_or_one(w.first[1]);
      w.second_deterministic = is_zero_or_one(w.second[0]) && is_zero_or_one(w.second[1]);
      w.objects_agree = std::abs(w.first[0] - w.second[0]) <= kDeterminismTolerance;
      report.deterministic = report.deterministic && w.holds();
      report.witnesses.push_back(std::move(w));
    }
  }
  return report;
}

HypothesisFlags classify_model(const LhvModel& model) {
  HypothesisFlags flags;
  flags.hidden_variable = true;
  flags.bell_local = true;
  flags.einstein_local = "not decidable from a response table";
  flags.counterfactual_definite = true;
  for (const HiddenState& h : model.lambdas) {
    if (!is_supported(h)) continue;
    for (const auto& per_object : h.response.probs) {
      for (const auto& per_setting : per_object) {
        for (double p : per_setting) flags.counterfactual_definite = flags.counterfactual_definite && is_zero_or_one(p);
      }
    }
  }
  flags.perfect_correlations = true;
  for (Setting s : kAllSettings) flags.perfect_correlations = flags.perfect_correlations && check_perfect_correlation(model, s);
  return flags;
}

}  // namespace bellmp
