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

// bellmp command-line tool: exact quantum and hidden-variable correlations,
// angle scans, seeded sampling, and the determinism argument for
// Bell-local models.

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bellmp/model_io.hpp"
#include "bellmp/report.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kValidationError = 3;
constexpr int kIoError = 4;

struct GlobalOptions {
  std::string output;
  std::string format = "text";
};

void emit(const bellmp::ReportDocument& report, const GlobalOptions& opts) {
  const std::string body =
      opts.format == "structured" ? bellmp::render_structured(report) : bellmp::render_text(report);
  if (opts.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw bellmp::IoError("cannot write report to " + opts.output);
  out << body;
  if (!out) throw bellmp::IoError("failed writing report to " + opts.output);
}

bellmp::SettingsPolicy parse_policy(const std::string& text) {
  if (text == "uniform") return bellmp::SettingsPolicy::uniform();
  if (text.size() == 2) {
    return bellmp::SettingsPolicy::fixed_pair(
        {bellmp::parse_setting(text.substr(0, 1)), bellmp::parse_setting(text.substr(1, 1))});
  }
  throw bellmp::InvalidArgument("settings policy must be 'uniform' or a pair such as 'AB'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell inequality toolkit: quantum violation, hidden variable bounds, scans and sampling"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--output,-o", opts.output, "Write the report to this file instead of stdout");
  app.add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* quantum = app.add_subcommand("quantum", "Exact |Phi+> correlations at three equatorial angles");
  std::array<double, 3> angles{0.0, 120.0, -120.0};
  quantum->add_option("--angles", angles, "theta_A theta_B theta_C in degrees");

  auto* lhv = app.add_subcommand("lhv", "Exact correlations of a hidden variable model file");
  std::string lhv_model;
  lhv->add_option("model", lhv_model, "Model file (JSON)")->required();

  auto* scan = app.add_subcommand("scan", "Grid scan of the quantum Bell sum over (theta_B, theta_C)");
  double step = 1.0;
  bool refine = false;
  std::string scan_csv;
  scan->add_option("--step", step, "Grid step in degrees");
  scan->add_flag("--refine", refine, "Refine to 0.01 degrees around the minimum");
  scan->add_option("--csv", scan_csv, "Write theta_b_deg,theta_c_deg,bell_sum rows here");

  auto* sample = app.add_subcommand("sample", "Seeded Monte Carlo estimate of the Bell sum");
  std::uint64_t n = 1000000;
  std::uint64_t seed = 42;
  std::string source = "quantum";
  std::string sample_model;
  std::string policy = "uniform";
  std::string trials_csv;
  sample->add_option("--n", n, "Number of trials")->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed, "Seed for the mt19937_64 stream");
  sample->add_option("--source", source, "quantum or lhv")->check(CLI::IsMember({"quantum", "lhv"}));
  sample->add_option("--model", sample_model, "Model file for --source lhv (default: uniform over 8 triplets)");
  sample->add_option("--settings-policy", policy, "'uniform' or a fixed pair such as AB");
  sample->add_option("--trials-csv", trials_csv, "Write trial,X,X',x,x' rows here");

  auto* determinism = app.add_subcommand("determinism", "Perfect correlations imply determinism for a model file");
  std::string determinism_model;
  determinism->add_option("model", determinism_model, "Model file (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (quantum->parsed()) {
      emit(bellmp::cmd_quantum(angles), opts);
    } else if (lhv->parsed()) {
      emit(bellmp::cmd_lhv(bellmp::load_model(lhv_model), lhv_model), opts);
    } else if (scan->parsed()) {
      std::optional<std::filesystem::path> csv;
      if (!scan_csv.empty()) csv = scan_csv;
      emit(bellmp::cmd_scan(step, refine, csv).report, opts);
    } else if (sample->parsed()) {
      bellmp::RunConfig config{n, seed, parse_policy(policy)};
      bellmp::Source src = bellmp::trine_source();
      std::string name = "quantum (Phi+, trine bases)";
      if (source == "lhv") {
        if (sample_model.empty()) {
          bellmp::TripletWeights uniform;
          for (const auto& t : bellmp::enumerate_deterministic_strategies()) uniform[t] = 0.125;
          src = bellmp::model_from_triplet_distribution(uniform);
          name = "lhv (uniform over 8 triplets)";
        } else {
          src = bellmp::load_model(sample_model);
          name = "lhv (" + sample_model + ")";
        }
      }
      std::ofstream trials;
      bellmp::TrialSink sink;
      if (!trials_csv.empty()) {
        trials.open(trials_csv, std::ios::binary);
        if (!trials) throw bellmp::IoError("cannot write trial log " + trials_csv);
        bellmp::write_trial_csv_header(trials);
        sink = [&trials](const bellmp::TrialRecord& t) { bellmp::write_trial_csv_row(trials, t); };
      }
      emit(bellmp::cmd_sample(config, src, name, sink), opts);
      if (trials.is_open() && !trials.flush()) throw bellmp::IoError("failed writing trial log " + trials_csv);
    } else if (determinism->parsed()) {
      emit(bellmp::cmd_determinism(bellmp::load_model(determinism_model), determinism_model), opts);
    }
  } catch (const bellmp::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const bellmp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const bellmp::InvalidDistribution& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
