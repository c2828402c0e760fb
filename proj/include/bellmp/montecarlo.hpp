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
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <variant>

#include "bellmp/common.hpp"
#include "bellmp/lhv.hpp"
#include "bellmp/quantum.hpp"

namespace bellmp {

/// Two-sided 99% standard normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

/// Seeded stream built on std::mt19937_64, whose output sequence is fixed by
/// the C++ standard. Conversions to doubles and bounded integers are done
/// here rather than through <random> distributions, which are not portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Uniform on {0, ..., bound - 1} without modulo bias.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

struct QuantumSource {
  TwoQubitState state;
  std::array<MeasurementBasis, 3> bases;  // indexed by Setting
};

/// |Phi+> measured in the trine bases.
QuantumSource trine_source();

using Source = std::variant<QuantumSource, LhvModel>;

struct SettingPair {
  Setting first = Setting::A;
  Setting second = Setting::A;

  auto operator<=>(const SettingPair&) const = default;
};

inline constexpr std::size_t pair_index(SettingPair s) {
  return 3 * index_of(s.first) + index_of(s.second);
}

/// Either a fixed pair for every trial or a fresh uniform draw over
/// {A,B,C}^2 per trial.
struct SettingsPolicy {
  std::optional<SettingPair> fixed;

  static SettingsPolicy uniform() { return {}; }
  static SettingsPolicy fixed_pair(SettingPair p) { return {p}; }
};

struct RunConfig {
  std::uint64_t n_samples = 1;
  std::uint64_t seed = 0;
  SettingsPolicy policy;
};

struct TrialRecord {
  std::uint64_t index = 0;
  SettingPair settings;
  Bit x1 = 0;
  Bit x2 = 0;
  int lambda_index = -1;  // -1 for quantum sources
};

/// Draws one trial. For hidden variable models lambda is drawn from p(lambda)
/// first, then each object's outcome independently from its response table.
TrialRecord sample_trial(const Source& source, SettingPair settings, Rng& rng,
                         std::uint64_t index = 0);

struct PairEstimate {
  SettingPair settings;
  std::uint64_t trials = 0;
  std::uint64_t same = 0;
  double p_same = 0.0;
  double std_error = 0.0;
  double lower = 0.0;  // 99% interval, clipped to [0, 1]
  double upper = 1.0;
  bool wilson = false;  // interval from the Wilson score formula
};

struct BellSumEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  double lower = 0.0;
  double upper = 3.0;
};

struct EstimateReport {
  RunConfig config;
  std::array<PairEstimate, 9> pairs{};  // indexed by pair_index
  /// Present only when (A,B), (A,C) and (B,C) each received at least one trial.
  std::optional<BellSumEstimate> bell_sum;

  const PairEstimate& pair(SettingPair s) const { return pairs[pair_index(s)]; }
};

/// 99% interval and standard error from `same` successes in `trials`.
/// Falls back to the Wilson score interval when fewer than 5 successes or
/// failures were seen.
PairEstimate estimate_pair(SettingPair settings, std::uint64_t trials, std::uint64_t same);

using TrialSink = std::function<void(const TrialRecord&)>;

/// Runs `config.n_samples` trials from a single seeded stream. Settings are
/// drawn before lambda and outcomes, from the same stream but never
/// conditioned on them. Throws InvalidArgument when n_samples is zero.
EstimateReport run_experiment(const RunConfig& config, const Source& source,
                              const TrialSink& sink = {});

/// Columns: trial,X,X',x,x'
void write_trial_csv_header(std::ostream& out);
void write_trial_csv_row(std::ostream& out, const TrialRecord& trial);

}  // namespace bellmp
