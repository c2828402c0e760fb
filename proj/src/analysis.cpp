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

#include "bellmp/analysis.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "bellmp/quantum.hpp"

namespace bellmp {

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

void require_probability(double p, const char* name) {
  if (!std::isfinite(p) || p < -kProbabilityTolerance || p > 1.0 + kProbabilityTolerance) {
    throw InvalidArgument(std::string(name) + " = " + std::to_string(p) + " is not a probability");
  }
}

}  // namespace

BellCheck bell_sum_check(const CorrelationRecord& record) {
  require_probability(record.p_same_ab, "P_same(A,B)");
  require_probability(record.p_same_ac, "P_same(A,C)");
  require_probability(record.p_same_bc, "P_same(B,C)");
  const double sum = record.p_same_ab + record.p_same_ac + record.p_same_bc;
  return {sum, sum >= 1.0 - kProbabilityTolerance};
}

VennAreas venn_decomposition(const TripletWeights& weights) {
  validate_triplet_weights(weights);
  VennAreas areas;
  for (const auto& [t, w] : weights) {
    const bool ab = t.a == t.b;
    const bool ac = t.a == t.c;
    if (ab) areas.dashed += w;
    if (ac) areas.gray += w;
    if (ab && ac) areas.overlap += w;
    if (!ab && !ac) areas.dotted += w;
  }
  areas.residual = 1.0 - (areas.dashed + areas.gray - areas.overlap) - areas.dotted;
  return areas;
}

VennChain venn_bound_chain(const TripletWeights& weights) {
  VennChain chain;
  chain.areas = venn_decomposition(weights);
  chain.p_same = lhv_bell_record(model_from_triplet_distribution(weights));
  chain.bc_covers_dotted = chain.p_same.p_same_bc >= chain.areas.dotted - kProbabilityTolerance;
  chain.sum_covers_areas = chain.p_same.bell_sum >= chain.areas.sum() - kProbabilityTolerance;
  chain.areas_cover_circle = chain.areas.sum() >= 1.0 - kProbabilityTolerance;
  return chain;
}

bool venn_bound_check(const TripletWeights& weights) { return venn_bound_chain(weights).holds(); }

ScanResult scan_angles(std::span<const double> theta_grid) {
  if (theta_grid.empty()) throw InvalidArgument("scan grid is empty");
  for (double t : theta_grid) {
    if (!std::isfinite(t)) throw InvalidArgument("scan grid contains a non-finite angle");
  }
  const TwoQubitState phi = make_phi_plus();
  const MeasurementBasis a = basis_from_angle(0.0, "A");

  ScanResult result;
  result.grid.reserve(theta_grid.size() * theta_grid.size());
  for (double tb : theta_grid) {
    const MeasurementBasis b = basis_from_angle(tb, "B");
    for (double tc : theta_grid) {
      const MeasurementBasis c = basis_from_angle(tc, "C");
      result.grid.push_back({0.0, tb, tc, bell_record(phi, a, b, c).bell_sum});
    }
  }
  result.argmin = result.grid.front();
  for (const ScanPoint& p : result.grid) {
    if (p.bell_sum < result.argmin.bell_sum) result.argmin = p;
  }
  result.min_sum = result.argmin.bell_sum;
  return result;
}

std::vector<double> degree_grid(double step_deg) {
  if (!std::isfinite(step_deg) || step_deg <= 0.0) {
    throw InvalidArgument("grid step must be a positive number of degrees");
  }
  std::vector<double> grid;
  for (long k = 0;; ++k) {
    const double deg = static_cast<double>(k) * step_deg;
    if (deg >= 360.0) break;
    grid.push_back(deg * kDegree);
  }
  return grid;
}

ScanResult refine_scan(const ScanResult& coarse, double half_width, double step) {
  if (!std::isfinite(half_width) || half_width < 0.0 || !std::isfinite(step) || step <= 0.0) {
    throw InvalidArgument("refinement needs a finite half-width and a positive step");
  }
  const long steps = std::lround(half_width / step);
  const TwoQubitState phi = make_phi_plus();
  const MeasurementBasis a = basis_from_angle(0.0, "A");

  ScanResult result = coarse;
  result.grid.reserve(coarse.grid.size() + static_cast<std::size_t>((2 * steps + 1) * (2 * steps + 1)));
  for (long i = -steps; i <= steps; ++i) {
    const double tb = coarse.argmin.theta_b + static_cast<double>(i) * step;
    const MeasurementBasis b = basis_from_angle(tb, "B");
    for (long j = -steps; j <= steps; ++j) {
      const double tc = coarse.argmin.theta_c + static_cast<double>(j) * step;
      const MeasurementBasis c = basis_from_angle(tc, "C");
      const ScanPoint p{0.0, tb, tc, bell_record(phi, a, b, c).bell_sum};
      result.grid.push_back(p);
      if (p.bell_sum < result.argmin.bell_sum) result.argmin = p;
    }
  }
  result.min_sum = result.argmin.bell_sum;
  return result;
}

void write_scan_csv(std::ostream& out, const ScanResult& result) {
  const auto old_precision = out.precision();
  out << "theta_b_deg,theta_c_deg,bell_sum\n";
  for (const ScanPoint& p : result.grid) {
    out.precision(12);
    out << p.theta_b / kDegree << ',' << p.theta_c / kDegree << ',';
    out.precision(17);
    out << p.bell_sum << '\n';
  }
  out.precision(old_precision);
}

}  // namespace bellmp
