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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellmp/analysis.hpp"
#include "bellmp/lhv.hpp"
#include "bellmp/montecarlo.hpp"

namespace bellmp {

enum class Verdict { Satisfies, Violates, Inconclusive };

/// "SATISFIES Bell inequality", "VIOLATES Bell inequality" or
/// "INCONCLUSIVE (statistical)".
std::string_view verdict_text(Verdict v);

Verdict verdict_for(const BellCheck& check);

/// Violation needs the whole 99% interval of the sum below 1, satisfaction
/// needs it at or above 1. Anything else, including a run that never
/// measured one of the three pairs, is inconclusive.
Verdict verdict_for(const EstimateReport& estimate);

struct ScanSummary {
  std::size_t points = 0;
  double step_deg = 0.0;
  bool refined = false;
  ScanPoint argmin;
  double min_sum = 0.0;
};

struct ReportDocument {
  std::string mode;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<CorrelationRecord> correlations;
  std::optional<EstimateReport> estimate;
  std::optional<HypothesisFlags> hypotheses;
  std::optional<VennChain> venn;
  std::optional<DeterminismReport> determinism;
  std::optional<ScanSummary> scan;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::Inconclusive;
};

std::string render_text(const ReportDocument& report);

/// One self-describing JSON document.
std::string render_structured(const ReportDocument& report);

/// Triplet weights of a model whose supported lambdas are all deterministic
/// with identical objects; nullopt otherwise.
std::optional<TripletWeights> triplet_weights_of(const LhvModel& model);

/// Exact |Phi+> correlations at the three angles (degrees).
ReportDocument cmd_quantum(const std::array<double, 3>& angles_deg = {0.0, 120.0, -120.0});

ReportDocument cmd_lhv(const LhvModel& model, std::string_view model_name);

struct ScanCommandResult {
  ScanResult scan;
  ReportDocument report;
};

/// Scans (theta_b, theta_c) on a `step_deg` grid, optionally refining to
/// 0.01 degrees within one degree of the minimum, and writes the CSV when a
/// path is given. Throws InvalidArgument for a non-positive step and IoError
/// when the CSV cannot be written.
ScanCommandResult cmd_scan(double step_deg, bool refine,
                           const std::optional<std::filesystem::path>& csv_path = std::nullopt);

ReportDocument cmd_sample(const RunConfig& config, const Source& source,
                          std::string_view source_name, const TrialSink& sink = {});

ReportDocument cmd_determinism(const LhvModel& model, std::string_view model_name);

}  // namespace bellmp
