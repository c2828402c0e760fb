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


#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <string>

#include "bellmp/analysis.hpp"
#include "bellmp/lhv.hpp"
#include "bellmp/model_io.hpp"
#include "bellmp/montecarlo.hpp"
#include "bellmp/quantum.hpp"
#include "bellmp/report.hpp"

namespace py = pybind11;
using namespace bellmp;

namespace {

// Python side uses {"001": weight} dictionaries for triplet distributions.
TripletWeights weights_from(const std::map<std::string, double>& d) {
  TripletWeights w;
  for (const auto& [code, p] : d) w[PropertyTriplet::from_code(code)] = p;
  return w;
}

std::map<std::string, double> weights_to(const TripletWeights& w) {
  std::map<std::string, double> d;
  for (const auto& [t, p] : w) d[t.code()] = p;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bell inequality checks for two-object three-setting experiments";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::enum_<Setting>(m, "Setting")
      .value("A", Setting::A)
      .value("B", Setting::B)
      .value("C", Setting::C);
  m.def("parse_setting", [](const std::string& s) { return parse_setting(s); });

  py::class_<CorrelationRecord>(m, "CorrelationRecord")
      .def_readonly("p_same_ab", &CorrelationRecord::p_same_ab)
      .def_readonly("p_same_ac", &CorrelationRecord::p_same_ac)
      .def_readonly("p_same_bc", &CorrelationRecord::p_same_bc)
      .def_readonly("bell_sum", &CorrelationRecord::bell_sum)
      .def("__repr__", [](const CorrelationRecord& r) {
        return "CorrelationRecord(ab=" + std::to_string(r.p_same_ab) + ", ac=" + std::to_string(r.p_same_ac) +
               ", bc=" + std::to_string(r.p_same_bc) + ", sum=" + std::to_string(r.bell_sum) + ")";
      });

  // quantum
  py::class_<TwoQubitState>(m, "TwoQubitState")
      .def(py::init<>())
      .def_readwrite("amp", &TwoQubitState::amp)
      .def("norm_squared", &TwoQubitState::norm_squared)
      .def("is_normalized", &TwoQubitState::is_normalized, py::arg("tolerance") = kNormalizationGate);
  m.def("make_phi_plus", &make_phi_plus);
  m.def("make_product_state", &make_product_state, py::arg("x1"), py::arg("x2"));

  py::class_<MeasurementBasis>(m, "MeasurementBasis")
      .def_readonly("theta", &MeasurementBasis::theta)
      .def_readonly("ket0", &MeasurementBasis::ket0)
      .def_readonly("ket1", &MeasurementBasis::ket1)
      .def_readonly("label", &MeasurementBasis::label);
  m.def("basis_from_angle", &basis_from_angle, py::arg("theta"), py::arg("label") = "");
  m.def("trine_bases", &trine_bases);

  py::class_<JointOutcomeDistribution>(m, "JointOutcomeDistribution")
      .def_readonly("p", &JointOutcomeDistribution::p)
      .def_readonly("settings", &JointOutcomeDistribution::settings)
      .def("same", &JointOutcomeDistribution::same);
  m.def("joint_distribution", &joint_distribution);
  m.def("p_same", &p_same);
  m.def("bell_record", &bell_record);
  m.def("verify_schmidt_invariance", &verify_schmidt_invariance, py::arg("state"), py::arg("basis"),
        py::arg("tolerance") = 1e-10);

  // hidden variable models
  py::enum_<Object>(m, "Object").value("First", Object::First).value("Second", Object::Second);

  py::class_<ResponseTable>(m, "ResponseTable")
      .def(py::init<>())
      .def_readwrite("probs", &ResponseTable::probs)
      .def("at", py::overload_cast<Object, Setting, Bit>(&ResponseTable::at, py::const_))
      .def("set", [](ResponseTable& r, Object o, Setting s, Bit x, double p) { r.at(o, s, x) = p; });

  py::class_<HiddenState>(m, "HiddenState")
      .def(py::init<>())
      .def_readwrite("id", &HiddenState::id)
      .def_readwrite("weight", &HiddenState::weight)
      .def_readwrite("response", &HiddenState::response);

  py::class_<LhvModel>(m, "LhvModel")
      .def(py::init<>())
      .def_readwrite("lambdas", &LhvModel::lambdas)
      .def(py::self == py::self);

  m.def("enumerate_deterministic_strategies", [] {
    std::vector<std::string> codes;
    for (const auto& t : enumerate_deterministic_strategies()) codes.push_back(t.code());
    return codes;
  });
  m.def("model_from_triplet_distribution",
        [](const std::map<std::string, double>& w) { return model_from_triplet_distribution(weights_from(w)); });
  m.def("triplet_weights_of", [](const LhvModel& model) -> std::optional<std::map<std::string, double>> {
    auto w = triplet_weights_of(model);
    if (!w) return std::nullopt;
    return weights_to(*w);
  });
  m.def("validate_model", &validate_model);
  m.def("joint_probability", &joint_probability);
  m.def("lhv_p_same", &lhv_p_same);
  m.def("lhv_bell_record", &lhv_bell_record);
  m.def("discordance_mass", &discordance_mass);
  m.def("check_perfect_correlation", &check_perfect_correlation);
  m.def("check_bell_locality", [](const LhvModel& model) { return check_bell_locality(build_joint_table(model), model); });

  py::class_<HypothesisFlags>(m, "HypothesisFlags")
      .def_readonly("counterfactual_definite", &HypothesisFlags::counterfactual_definite)
      .def_readonly("einstein_local", &HypothesisFlags::einstein_local)
      .def_readonly("hidden_variable", &HypothesisFlags::hidden_variable)
      .def_readonly("bell_local", &HypothesisFlags::bell_local)
      .def_readonly("perfect_correlations", &HypothesisFlags::perfect_correlations)
      .def_readonly("no_superdeterminism", &HypothesisFlags::no_superdeterminism)
      .def_readonly("measurement_independence", &HypothesisFlags::measurement_independence);
  m.def("classify_model", &classify_model);

  py::class_<DeterminismWitness>(m, "DeterminismWitness")
      .def_readonly("lambda_id", &DeterminismWitness::lambda_id)
      .def_readonly("weight", &DeterminismWitness::weight)
      .def_readonly("setting", &DeterminismWitness::setting)
      .def_readonly("first", &DeterminismWitness::first)
      .def_readonly("second", &DeterminismWitness::second)
      .def("holds", &DeterminismWitness::holds);
  py::class_<DiscordanceViolation>(m, "DiscordanceViolation")
      .def_readonly("setting", &DiscordanceViolation::setting)
      .def_readonly("lambda_id", &DiscordanceViolation::lambda_id)
      .def_readonly("mass", &DiscordanceViolation::mass);
  py::class_<DeterminismReport>(m, "DeterminismReport")
      .def_readonly("degenerate", &DeterminismReport::degenerate)
      .def_readonly("premises_hold", &DeterminismReport::premises_hold)
      .def_readonly("deterministic", &DeterminismReport::deterministic)
      .def_readonly("witnesses", &DeterminismReport::witnesses)
      .def_readonly("violations", &DeterminismReport::violations);
  m.def("derive_determinism", &derive_determinism);

  // analysis
  py::class_<BellCheck>(m, "BellCheck")
      .def_readonly("sum", &BellCheck::sum)
      .def_readonly("satisfied", &BellCheck::satisfied);
  m.def("bell_sum_check", &bell_sum_check);

  py::class_<VennAreas>(m, "VennAreas")
      .def_readonly("dashed", &VennAreas::dashed)
      .def_readonly("gray", &VennAreas::gray)
      .def_readonly("dotted", &VennAreas::dotted)
      .def_readonly("overlap", &VennAreas::overlap)
      .def_readonly("residual", &VennAreas::residual)
      .def("sum", &VennAreas::sum);
  py::class_<VennChain>(m, "VennChain")
      .def_readonly("p_same", &VennChain::p_same)
      .def_readonly("areas", &VennChain::areas)
      .def("holds", &VennChain::holds);
  m.def("venn_decomposition", [](const std::map<std::string, double>& w) { return venn_decomposition(weights_from(w)); });
  m.def("venn_bound_chain", [](const std::map<std::string, double>& w) { return venn_bound_chain(weights_from(w)); });
  m.def("venn_bound_check", [](const std::map<std::string, double>& w) { return venn_bound_check(weights_from(w)); });

  py::class_<ScanPoint>(m, "ScanPoint")
      .def_readonly("theta_a", &ScanPoint::theta_a)
      .def_readonly("theta_b", &ScanPoint::theta_b)
      .def_readonly("theta_c", &ScanPoint::theta_c)
      .def_readonly("bell_sum", &ScanPoint::bell_sum);
  py::class_<ScanResult>(m, "ScanResult")
      .def_readonly("grid", &ScanResult::grid)
      .def_readonly("min_sum", &ScanResult::min_sum)
      .def_readonly("argmin", &ScanResult::argmin);
  m.def("scan_angles", [](const std::vector<double>& grid) { return scan_angles(grid); });
  m.def("degree_grid", &degree_grid);
  m.def("refine_scan", &refine_scan);

  // sampling
  py::class_<QuantumSource>(m, "QuantumSource")
      .def(py::init<>())
      .def_readwrite("state", &QuantumSource::state)
      .def_readwrite("bases", &QuantumSource::bases);
  m.def("trine_source", &trine_source);

  py::class_<SettingPair>(m, "SettingPair")
      .def(py::init([](Setting a, Setting b) { return SettingPair{a, b}; }))
      .def_readonly("first", &SettingPair::first)
      .def_readonly("second", &SettingPair::second);
  py::class_<SettingsPolicy>(m, "SettingsPolicy")
      .def_readonly("fixed", &SettingsPolicy::fixed)
      .def_static("uniform", &SettingsPolicy::uniform)
      .def_static("fixed_pair", &SettingsPolicy::fixed_pair);
  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init([](std::uint64_t n, std::uint64_t seed, SettingsPolicy policy) {
             return RunConfig{n, seed, policy};
           }),
           py::arg("n_samples"), py::arg("seed") = 0, py::arg("policy") = SettingsPolicy::uniform())
      .def_readwrite("n_samples", &RunConfig::n_samples)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("policy", &RunConfig::policy);

  py::class_<TrialRecord>(m, "TrialRecord")
      .def_readonly("index", &TrialRecord::index)
      .def_readonly("settings", &TrialRecord::settings)
      .def_readonly("x1", &TrialRecord::x1)
      .def_readonly("x2", &TrialRecord::x2)
      .def_readonly("lambda_index", &TrialRecord::lambda_index);
  py::class_<PairEstimate>(m, "PairEstimate")
      .def_readonly("settings", &PairEstimate::settings)
      .def_readonly("trials", &PairEstimate::trials)
      .def_readonly("same", &PairEstimate::same)
      .def_readonly("p_same", &PairEstimate::p_same)
      .def_readonly("std_error", &PairEstimate::std_error)
      .def_readonly("lower", &PairEstimate::lower)
      .def_readonly("upper", &PairEstimate::upper)
      .def_readonly("wilson", &PairEstimate::wilson);
  py::class_<BellSumEstimate>(m, "BellSumEstimate")
      .def_readonly("estimate", &BellSumEstimate::estimate)
      .def_readonly("std_error", &BellSumEstimate::std_error)
      .def_readonly("lower", &BellSumEstimate::lower)
      .def_readonly("upper", &BellSumEstimate::upper);
  py::class_<EstimateReport>(m, "EstimateReport")
      .def_readonly("config", &EstimateReport::config)
      .def_readonly("pairs", &EstimateReport::pairs)
      .def_readonly("bell_sum", &EstimateReport::bell_sum)
      .def("pair", &EstimateReport::pair);
  m.def("estimate_pair", &estimate_pair);
  m.def("run_experiment", &run_experiment, py::arg("config"), py::arg("source"), py::arg("sink") = TrialSink{});

  // model files
  m.def("parse_model", [](const std::string& text) { return parse_model(text); });
  m.def("load_model", &load_model);
  m.def("serialize_model", &serialize_model);
  m.def("save_model", &save_model);

  // reports
  py::enum_<Verdict>(m, "Verdict")
      .value("Satisfies", Verdict::Satisfies)
      .value("Violates", Verdict::Violates)
      .value("Inconclusive", Verdict::Inconclusive);
  m.def("verdict_text", [](Verdict v) { return std::string(verdict_text(v)); });

  py::class_<ReportDocument>(m, "ReportDocument")
      .def_readonly("mode", &ReportDocument::mode)
      .def_readonly("inputs", &ReportDocument::inputs)
      .def_readonly("correlations", &ReportDocument::correlations)
      .def_readonly("estimate", &ReportDocument::estimate)
      .def_readonly("hypotheses", &ReportDocument::hypotheses)
      .def_readonly("venn", &ReportDocument::venn)
      .def_readonly("determinism", &ReportDocument::determinism)
      .def_readonly("notes", &ReportDocument::notes)
      .def_readonly("verdict", &ReportDocument::verdict)
      .def("text", [](const ReportDocument& r) { return render_text(r); })
      .def("structured", [](const ReportDocument& r) { return render_structured(r); });

  m.def("cmd_quantum", &cmd_quantum, py::arg("angles_deg") = std::array<double, 3>{0.0, 120.0, -120.0});
  m.def("cmd_lhv", [](const LhvModel& model, const std::string& name) { return cmd_lhv(model, name); },
        py::arg("model"), py::arg("name") = "model");
  m.def("cmd_scan", [](double step_deg, bool refine) { return cmd_scan(step_deg, refine).report; },
        py::arg("step_deg") = 1.0, py::arg("refine") = false);
  m.def("cmd_sample", [](const RunConfig& config, const Source& source, const std::string& name) {
        return cmd_sample(config, source, name);
      });
  m.def("cmd_determinism", [](const LhvModel& model, const std::string& name) { return cmd_determinism(model, name); },
        py::arg("model"), py::arg("name") = "model");
  m.def("render_text", &render_text);
  m.def("render_structured", &render_structured);
}
