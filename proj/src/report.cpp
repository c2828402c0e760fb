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

#include "bellmp/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace bellmp {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kDegree = std::numbers::pi / 180.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string yes_no(bool v) { return v ? "true" : "false"; }

std::string pair_name(SettingPair p) {
  return {setting_name(p.first), ',', setting_name(p.second)};
}

std::string policy_name(const SettingsPolicy& policy) {
  if (!policy.fixed) return "uniform";
  return {setting_name(policy.fixed->first), setting_name(policy.fixed->second)};
}

const char* holds(bool v) { return v ? "HOLDS" : "FAILS"; }

}  // namespace

std::string_view verdict_text(Verdict v) {
  switch (v) {
    case Verdict::Satisfies: return "SATISFIES Bell inequality";
    case Verdict::Violates: return "VIOLATES Bell inequality";
    case Verdict::Inconclusive: return "INCONCLUSIVE (statistical)";
  }
  return "INCONCLUSIVE (statistical)";
}

Verdict verdict_for(const BellCheck& check) {
  return check.satisfied ? Verdict::Satisfies : Verdict::Violates;
}

Verdict verdict_for(const EstimateReport& estimate) {
  if (!estimate.bell_sum) return Verdict::Inconclusive;
  if (estimate.bell_sum->upper < 1.0) return Verdict::Violates;
  if (estimate.bell_sum->lower >= 1.0) return Verdict::Satisfies;
  return Verdict::Inconclusive;
}

std::optional<TripletWeights> triplet_weights_of(const LhvModel& model) {
  TripletWeights weights;
  for (const HiddenState& h : model.lambdas) {
    if (!is_supported(h)) continue;
    PropertyTriplet t;
    std::array<Bit*, 3> fields = {&t.a, &t.b, &t.c};
    for (Setting s : kAllSettings) {
      const double p1 = h.response.at(Object::First, s, 0);
      const double p2 = h.response.at(Object::Second, s, 0);
      const bool zero = std::abs(p1) <= kDeterminismTolerance && std::abs(p2) <= kDeterminismTolerance;
      const bool one = std::abs(p1 - 1.0) <= kDeterminismTolerance && std::abs(p2 - 1.0) <= kDeterminismTolerance;
      if (!zero && !one) return std::nullopt;
      *fields[index_of(s)] = one ? 0 : 1;
    }
    weights[t] += h.weight;
  }
  if (weights.empty()) return std::nullopt;
  return weights;
}

// --- rendering ---------------------------------------------------------------

std::string render_text(const ReportDocument& r) {
  std::ostringstream os;
  os << "bellmp report\n";
  os << "mode: " << r.mode << "\n";
  if (!r.inputs.empty()) {
    os << "inputs:\n";
    for (const auto& [k, v] : r.inputs) os << "  " << k << ": " << v << "\n";
  }
  if (r.correlations) {
    const auto& c = *r.correlations;
    os << "correlations:\n";
    os << "  P_same(A,B): " << num(c.p_same_ab) << "\n";
    os << "  P_same(A,C): " << num(c.p_same_ac) << "\n";
    os << "  P_same(B,C): " << num(c.p_same_bc) << "\n";
    os << "  bell sum: " << num(c.bell_sum) << "\n";
    os << "  Bell bound P_same(A,B) + P_same(A,C) + P_same(B,C) >= 1: "
       << (c.bell_sum >= 1.0 - kProbabilityTolerance ? "obeyed" : "violated") << "\n";
  }
  if (r.estimate) {
    const auto& e = *r.estimate;
    os << "estimate:\n";
    os << "  pair  trials  same  p_same  std_error  99% interval\n";
    for (const PairEstimate& p : e.pairs) {
      os << "  " << pair_name(p.settings) << "  " << p.trials << "  " << p.same << "  "
         << num(p.p_same) << "  " << num(p.std_error) << "  [" << num(p.lower) << ", "
         << num(p.upper) << "]" << (p.wilson ? " (wilson)" : "") << "\n";
    }
    if (e.bell_sum) {
      os << "  bell sum estimate: " << num(e.bell_sum->estimate) << " +/- "
         << num(e.bell_sum->std_error) << " (99% interval [" << num(e.bell_sum->lower) << ", "
         << num(e.bell_sum->upper) << "])\n";
    } else {
      os << "  bell sum estimate: unavailable (a pair among A,B / A,C / B,C had no trials)\n";
    }
  }
  if (r.hypotheses) {
    const auto& h = *r.hypotheses;
    os << "hypotheses:\n";
    os << "  (A)  counterfactual definiteness: " << yes_no(h.counterfactual_definite) << "\n";
    os << "  (B)  Einstein locality: " << h.einstein_local << "\n";
    os << "  (C)  no super-determinism: assumed " << yes_no(h.no_superdeterminism) << "\n";
    os << "  (D)  measurement independence: assumed " << yes_no(h.measurement_independence) << "\n";
    os << "  (A') hidden variable model: " << yes_no(h.hidden_variable) << "\n";
    os << "  (B') Bell locality: " << yes_no(h.bell_local) << "\n";
    os << "  perfect correlations P_same(X,X) = 1: " << yes_no(h.perfect_correlations) << "\n";
  }
  if (r.venn) {
    const auto& v = *r.venn;
    os << "venn areas:\n";
    os << "  dashed (A=B): " << num(v.areas.dashed) << "\n";
    os << "  gray (A=C): " << num(v.areas.gray) << "\n";
    os << "  dotted (A!=B and A!=C): " << num(v.areas.dotted) << "\n";
    os << "  overlap (A=B and A=C): " << num(v.areas.overlap) << "\n";
    os << "  residual: " << num(v.areas.residual) << "\n";
    os << "  P_same(B,C) " << num(v.p_same.p_same_bc) << " >= dotted " << num(v.areas.dotted)
       << ": " << holds(v.bc_covers_dotted) << "\n";
    os << "  P_same sum " << num(v.p_same.bell_sum) << " >= dashed + gray + dotted "
       << num(v.areas.sum()) << ": " << holds(v.sum_covers_areas) << "\n";
    os << "  dashed + gray + dotted " << num(v.areas.sum()) << " >= 1: "
       << holds(v.areas_cover_circle) << "\n";
  }
  if (r.determinism) {
    const auto& d = *r.determinism;
    os << "determinism witnesses:\n";
    for (const auto& w : d.witnesses) {
      os << "  lambda " << w.lambda_id << " (weight " << num(w.weight) << ") " << setting_name(w.setting)
         << ": P1 = (" << num(w.first[0]) << ", " << num(w.first[1]) << ") P2 = ("
         << num(w.second[0]) << ", " << num(w.second[1]) << ") object1 "
         << (w.first_deterministic ? "deterministic" : "stochastic") << ", object2 "
         << (w.second_deterministic ? "deterministic" : "stochastic") << ", "
         << (w.objects_agree ? "equal" : "different") << "\n";
    }
    for (const auto& v : d.violations) {
      os << "  discordance on " << setting_name(v.setting) << " at lambda " << v.lambda_id
         << ": mass " << num(v.mass) << "\n";
    }
    if (d.witnesses.empty() && d.violations.empty()) os << "  (none)\n";
  }
  if (r.scan) {
    const auto& s = *r.scan;
    os << "scan:\n";
    os << "  grid points: " << s.points << "\n";
    os << "  step_deg: " << num(s.step_deg) << (s.refined ? " (refined to 0.01 around minimum)" : "") << "\n";
    os << "  min bell sum: " << num(s.min_sum) << "\n";
    os << "  argmin (theta_a, theta_b, theta_c) deg: (" << num(s.argmin.theta_a / kDegree) << ", "
       << num(s.argmin.theta_b / kDegree) << ", " << num(s.argmin.theta_c / kDegree) << ")\n";
  }
  if (!r.notes.empty()) {
    os << "notes:\n";
    for (const auto& n : r.notes) os << "  " << n << "\n";
  }
  os << "verdict: " << verdict_text(r.verdict) << "\n";
  return os.str();
}

std::string render_structured(const ReportDocument& r) {
  ojson doc;
  doc["format"] = "bellmp-report/1";
  doc["mode"] = r.mode;
  ojson inputs = ojson::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  doc["inputs"] = std::move(inputs);
  if (r.correlations) {
    const auto& c = *r.correlations;
    doc["correlations"] = {{"p_same_ab", c.p_same_ab},
                           {"p_same_ac", c.p_same_ac},
                           {"p_same_bc", c.p_same_bc},
                           {"bell_sum", c.bell_sum}};
  }
  if (r.estimate) {
    const auto& e = *r.estimate;
    ojson est;
    est["n_samples"] = e.config.n_samples;
    est["seed"] = e.config.seed;
    est["settings_policy"] = policy_name(e.config.policy);
    est["pairs"] = ojson::array();
    for (const PairEstimate& p : e.pairs) {
      est["pairs"].push_back({{"pair", pair_name(p.settings)},
                              {"trials", p.trials},
                              {"same", p.same},
                              {"p_same", p.p_same},
                              {"std_error", p.std_error},
                              {"lower99", p.lower},
                              {"upper99", p.upper},
                              {"wilson", p.wilson}});
    }
    if (e.bell_sum) {
      est["bell_sum"] = {{"estimate", e.bell_sum->estimate},
                         {"std_error", e.bell_sum->std_error},
                         {"lower99", e.bell_sum->lower},
                         {"upper99", e.bell_sum->upper}};
    } else {
      est["bell_sum"] = nullptr;
    }
    doc["estimate"] = std::move(est);
  }
  if (r.hypotheses) {
    const auto& h = *r.hypotheses;
    doc["hypotheses"] = {{"counterfactual_definite", h.counterfactual_definite},
                         {"einstein_local", h.einstein_local},
                         {"no_superdeterminism", h.no_superdeterminism},
                         {"measurement_independence", h.measurement_independence},
                         {"hidden_variable", h.hidden_variable},
                         {"bell_local", h.bell_local},
                         {"perfect_correlations", h.perfect_correlations}};
  }
  if (r.venn) {
    const auto& v = *r.venn;
    doc["venn"] = {{"dashed", v.areas.dashed},
                   {"gray", v.areas.gray},
                   {"dotted", v.areas.dotted},
                   {"overlap", v.areas.overlap},
                   {"residual", v.areas.residual},
                   {"p_same_sum", v.p_same.bell_sum},
                   {"area_sum", v.areas.sum()},
                   {"bc_covers_dotted", v.bc_covers_dotted},
                   {"sum_covers_areas", v.sum_covers_areas},
                   {"areas_cover_circle", v.areas_cover_circle}};
  }
  if (r.determinism) {
    const auto& d = *r.determinism;
    ojson det;
    det["degenerate"] = d.degenerate;
    det["premises_hold"] = d.premises_hold;
    det["deterministic"] = d.deterministic;
    det["witnesses"] = ojson::array();
    for (const auto& w : d.witnesses) {
      det["witnesses"].push_back({{"lambda", w.lambda_id},
                                  {"weight", w.weight},
                                  {"setting", std::string(1, setting_name(w.setting))},
                                  {"p1", {w.first[0], w.first[1]}},
                                  {"p2", {w.second[0], w.second[1]}},
                                  {"first_deterministic", w.first_deterministic},
                                  {"second_deterministic", w.second_deterministic},
                                  {"objects_agree", w.objects_agree}});
    }
    det["violations"] = ojson::array();
    for (const auto& v : d.violations) {
      det["violations"].push_back({{"setting", std::string(1, setting_name(v.setting))},
                                   {"lambda", v.lambda_id},
                                   {"mass", v.mass}});
    }
    doc["determinism"] = std::move(det);
  }
  if (r.scan) {
    const auto& s = *r.scan;
    doc["scan"] = {{"points", s.points},
                   {"step_deg", s.step_deg},
                   {"refined", s.refined},
                   {"min_sum", s.min_sum},
                   {"argmin_deg", {s.argmin.theta_a / kDegree, s.argmin.theta_b / kDegree,
                                   s.argmin.theta_c / kDegree}}};
  }
  doc["notes"] = r.notes;
  doc["verdict"] = verdict_text(r.verdict);
  return doc.dump(2) + "\n";
}

// --- commands ----------------------------------------------------------------

ReportDocument cmd_quantum(const std::array<double, 3>& angles_deg) {
  for (double a : angles_deg) {
    if (!std::isfinite(a)) throw InvalidArgument("measurement angles must be finite");
  }
  const TwoQubitState phi = make_phi_plus();
  const auto a = basis_from_angle(angles_deg[0] * kDegree, "A");
  const auto b = basis_from_angle(angles_deg[1] * kDegree, "B");
  const auto c = basis_from_angle(angles_deg[2] * kDegree, "C");

  ReportDocument r;
  r.mode = "quantum";
  r.inputs = {{"state", "Phi+ = (|00> + |11>)/sqrt(2)"},
              {"theta_a_deg", num(angles_deg[0])},
              {"theta_b_deg", num(angles_deg[1])},
              {"theta_c_deg", num(angles_deg[2])}};
  r.correlations = bell_record(phi, a, b, c);
  r.verdict = verdict_for(bell_sum_check(*r.correlations));
  r.notes.push_back("trine value at (0, 120, -120) deg: 3/4");
  r.notes.push_back("QM ⇒ NOT (A) OR NOT (B), assuming (C) and (D)");
  return r;
}

ReportDocument cmd_lhv(const LhvModel& model, std::string_view model_name) {
  validate_model(model);
  ReportDocument r;
  r.mode = "lhv";
  r.inputs = {{"model", std::string(model_name)}, {"lambdas", std::to_string(model.lambdas.size())}};
  r.correlations = lhv_bell_record(model);
  r.hypotheses = classify_model(model);
  if (auto weights = triplet_weights_of(model)) {
    r.venn = venn_bound_chain(*weights);
  } else {
    r.notes.push_back("venn areas omitted: model is not a distribution over shared property triplets");
  }
  r.verdict = verdict_for(bell_sum_check(*r.correlations));
  r.notes.push_back("(A) AND (B) AND (C) AND (D) ⇒ Bell inequality");
  if (!r.hypotheses->perfect_correlations) {
    r.notes.push_back("perfect correlations fail, so the inequality's premises do not hold for this model");
  }
  return r;
}

ScanCommandResult cmd_scan(double step_deg, bool refine, const std::optional<std::filesystem::path>& csv_path) {
  const std::vector<double> grid = degree_grid(step_deg);
  ScanResult scan = scan_angles(grid);
  if (refine) scan = refine_scan(scan, 1.0 * kDegree, 0.01 * kDegree);

  if (csv_path) {
    std::ofstream out(*csv_path, std::ios::binary);
    if (!out) throw IoError("cannot write scan CSV " + csv_path->string());
    write_scan_csv(out, scan);
    if (!out) throw IoError("failed writing scan CSV " + csv_path->string());
  }

  ReportDocument r;
  r.mode = "scan";
  r.inputs = {{"step_deg", num(step_deg)}, {"refine", yes_no(refine)}};
  if (csv_path) r.inputs.emplace_back("csv", csv_path->string());
  const TwoQubitState phi = make_phi_plus();
  r.correlations = bell_record(phi, basis_from_angle(scan.argmin.theta_a, "A"),
                               basis_from_angle(scan.argmin.theta_b, "B"),
                               basis_from_angle(scan.argmin.theta_c, "C"));
  r.scan = ScanSummary{scan.grid.size(), step_deg, refine, scan.argmin, scan.min_sum};
  r.verdict = verdict_for(bell_sum_check(*r.correlations));
  r.notes.push_back("minimum over equatorial measurement bases with theta_a = 0 only");
  return {std::move(scan), std::move(r)};
}

ReportDocument cmd_sample(const RunConfig& config, const Source& source, std::string_view source_name,
                          const TrialSink& sink) {
  ReportDocument r;
  r.mode = "sample";
  r.inputs = {{"source", std::string(source_name)},
              {"n", std::to_string(config.n_samples)},
              {"seed", std::to_string(config.seed)},
              {"settings_policy", policy_name(config.policy)}};
  r.estimate = run_experiment(config, source, sink);
  r.verdict = verdict_for(*r.estimate);
  r.notes.push_back("settings drawn independently of lambda and outcomes, per (C) and (D)");
  return r;
}

ReportDocument cmd_determinism(const LhvModel& model, std::string_view model_name) {
  validate_model(model);
  ReportDocument r;
  r.mode = "determinism";
  r.inputs = {{"model", std::string(model_name)}, {"lambdas", std::to_string(model.lambdas.size())}};
  r.hypotheses = classify_model(model);
  r.correlations = lhv_bell_record(model);
  r.determinism = derive_determinism(model);

  const bool factorizes = check_bell_locality(build_joint_table(model), model);
  r.notes.push_back(std::string("Bell locality (joint table factorizes per lambda): ") + holds(factorizes));
  for (Setting s : kAllSettings) {
    r.notes.push_back(std::string("perfect correlation on ") + setting_name(s) + ": " +
                      holds(check_perfect_correlation(model, s)) + " (discordance " +
                      num(discordance_mass(model, s)) + ")");
  }
  const DeterminismReport& d = *r.determinism;
  if (d.degenerate) {
    r.notes.push_back("perfect correlations ⇒ determinism: VACUOUS (degenerate model, no supported lambda)");
  } else if (!d.premises_hold) {
    std::string failing;
    for (Setting s : kAllSettings) {
      if (!check_perfect_correlation(model, s)) failing += std::string(failing.empty() ? "" : ", ") + setting_name(s);
    }
    r.notes.push_back("perfect correlations ⇒ determinism: PRECONDITION FAILED on " + failing);
  } else {
    r.notes.push_back(std::string("perfect correlations ⇒ determinism: ") +
                      (d.deterministic ? "CONFIRMED" : "REFUTED"));
  }
  r.notes.push_back("(A') AND (B') AND (C) AND (D) ⇒ Bell inequality");
  r.verdict = verdict_for(bell_sum_check(*r.correlations));
  return r;
}

}  // namespace bellmp
