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

#include "bellmp/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace bellmp {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below needs a positive bound");
  // Values under 2^64 mod bound would make the low residues more likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

QuantumSource trine_source() { return {make_phi_plus(), trine_bases()}; }

namespace {

// Index of the first cumulative bucket above u, skipping empty buckets so
// rounding in the running sum can never select a zero-probability outcome.
template <std::size_t N>
std::size_t pick(const std::array<double, N>& probs, double u) {
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t k = 0; k < N; ++k) {
    if (probs[k] <= 0.0) continue;
    last_positive = k;
    cumulative += probs[k];
    if (u < cumulative) return k;
  }
  return last_positive;
}

class TrialSampler {
 public:
  explicit TrialSampler(const Source& source) : source_(source) {
    if (const auto* q = std::get_if<QuantumSource>(&source_)) {
      for (Setting s1 : kAllSettings) {
        for (Setting s2 : kAllSettings) {
          const auto d = joint_distribution(q->state, q->bases[index_of(s1)], q->bases[index_of(s2)]);
          cells_[pair_index({s1, s2})] = {d.p[0][0], d.p[0][1], d.p[1][0], d.p[1][1]};
        }
      }
    } else {
      const auto& model = std::get<LhvModel>(source_);
      validate_model(model);
      if (model.lambdas.empty()) throw InvalidArgument("hidden variable model has no lambda values");
    }
  }

  TrialRecord draw(SettingPair settings, Rng& rng, std::uint64_t index) const {
    TrialRecord t;
    t.index = index;
    t.settings = settings;
    if (std::holds_alternative<QuantumSource>(source_)) {
      const std::size_t cell = pick(cells_[pair_index(settings)], rng.uniform());
      t.x1 = static_cast<Bit>(cell >> 1);
      t.x2 = static_cast<Bit>(cell & 1u);
      return t;
    }
    const auto& lambdas = std::get<LhvModel>(source_).lambdas;
    const std::size_t l = pick_lambda(lambdas, rng.uniform());
    const ResponseTable& r = lambdas[l].response;
    t.lambda_index = static_cast<int>(l);
    t.x1 = rng.uniform() < r.at(Object::First, settings.first, 0) ? 0 : 1;
    t.x2 = rng.uniform() < r.at(Object::Second, settings.second, 0) ? 0 : 1;
    return t;
  }

 private:
  static std::size_t pick_lambda(const std::vector<HiddenState>& lambdas, double u) {
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
      if (lambdas[k].weight <= 0.0) continue;
      last_positive = k;
      cumulative += lambdas[k].weight;
      if (u < cumulative) return k;
    }
    return last_positive;
  }

  const Source& source_;
  std::array<std::array<double, 4>, 9> cells_{};
};

}  // namespace

TrialRecord sample_trial(const Source& source, SettingPair settings, Rng& rng, std::uint64_t index) {
  return TrialSampler(source).draw(settings, rng, index);
}

PairEstimate estimate_pair(SettingPair settings, std::uint64_t trials, std::uint64_t same) {
  PairEstimate e;
  e.settings = settings;
  e.trials = trials;
  e.same = same;
  if (trials == 0) return e;

  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(same) / n;
  e.p_same = p;
  e.std_error = std::sqrt(p * (1.0 - p) / n);
  if (same < 5 || trials - same < 5) {
    const double z2 = kZ99 * kZ99;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = kZ99 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    e.lower = center - half;
    e.upper = center + half;
    e.wilson = true;
  } else {
    e.lower = p - kZ99 * e.std_error;
    e.upper = p + kZ99 * e.std_error;
  }
  e.lower = std::clamp(e.lower, 0.0, 1.0);
  e.upper = std::clamp(e.upper, 0.0, 1.0);
  return e;
}

namespace {

// Standard error implied by the reported interval; equals std_error unless
// the Wilson fallback widened it.
double effective_error(const PairEstimate& e) {
  if (!e.wilson) return e.std_error;
  return std::max(e.std_error, (e.upper - e.lower) / (2.0 * kZ99));
}

}  // namespace

EstimateReport run_experiment(const RunConfig& config, const Source& source, const TrialSink& sink) {
  if (config.n_samples == 0) throw InvalidArgument("n_samples must be at least 1");
  const TrialSampler sampler(source);
  Rng rng(config.seed);

  std::array<std::uint64_t, 9> trials{};
  std::array<std::uint64_t, 9> same{};
  for (std::uint64_t i = 0; i < config.n_samples; ++i) {
    SettingPair settings;
    if (config.policy.fixed) {
      settings = *config.policy.fixed;
    } else {
      const auto k = rng.below(9);
      settings = {static_cast<Setting>(k / 3), static_cast<Setting>(k % 3)};
    }
    const TrialRecord t = sampler.draw(settings, rng, i);
    const std::size_t idx = pair_index(settings);
    ++trials[idx];
    if (t.x1 == t.x2) ++same[idx];
    if (sink) sink(t);
  }

  EstimateReport report;
  report.config = config;
  for (Setting s1 : kAllSettings) {
    for (Setting s2 : kAllSettings) {
      const std::size_t idx = pair_index({s1, s2});
      report.pairs[idx] = estimate_pair({s1, s2}, trials[idx], same[idx]);
    }
  }

  const auto& ab = report.pair({Setting::A, Setting::B});
  const auto& ac = report.pair({Setting::A, Setting::C});
  const auto& bc = report.pair({Setting::B, Setting::C});
  if (ab.trials > 0 && ac.trials > 0 && bc.trials > 0) {
    BellSumEstimate b;
    b.estimate = ab.p_same + ac.p_same + bc.p_same;
    const double eab = effective_error(ab);
    const double eac = effective_error(ac);
    const double ebc = effective_error(bc);
    b.std_error = std::sqrt(eab * eab + eac * eac + ebc * ebc);
    b.lower = std::clamp(b.estimate - kZ99 * b.std_error, 0.0, 3.0);
    b.upper = std::clamp(b.estimate + kZ99 * b.std_error, 0.0, 3.0);
    report.bell_sum = b;
  }
  return report;
}

void write_trial_csv_header(std::ostream& out) { out << "trial,X,X',x,x'\n"; }

void write_trial_csv_row(std::ostream& out, const TrialRecord& trial) {
  out << trial.index << ',' << setting_name(trial.settings.first) << ','
      << setting_name(trial.settings.second) << ',' << static_cast<int>(trial.x1) << ','
      << static_cast<int>(trial.x2) << '\n';
}

}  // namespace bellmp
