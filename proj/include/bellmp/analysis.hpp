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

#include <iosfwd>
#include <span>
#include <vector>

#include "bellmp/common.hpp"
#include "bellmp/lhv.hpp"

namespace bellmp {

struct BellCheck {
  double sum = 0.0;
  bool satisfied = false;
};

/// Evaluates P_same(A,B) + P_same(A,C) + P_same(B,C) >= 1 (with 1e-12 slack).
/// Throws InvalidArgument if a probability lies outside [0, 1].
BellCheck bell_sum_check(const CorrelationRecord& record);

/// Region areas of the Venn-diagram proof for a distribution over triplets.
struct VennAreas {
  double dashed = 0.0;    // a = b
  double gray = 0.0;      // a = c
  double dotted = 0.0;    // a != b and a != c
  double overlap = 0.0;   // a = b and a = c
  double residual = 0.0;  // 1 - (dashed + gray - overlap) - dotted, zero up to rounding

  double sum() const { return dashed + gray + dotted; }
};

VennAreas venn_decomposition(const TripletWeights& weights);

/// Each inequality of the area argument, evaluated separately.
struct VennChain {
  CorrelationRecord p_same;  // via the hidden variable engine
  VennAreas areas;           // directly from the weights
  bool bc_covers_dotted = false;     // P_same(B,C) >= dotted
  bool sum_covers_areas = false;     // P_same sum >= dashed + gray + dotted
  bool areas_cover_circle = false;   // dashed + gray + dotted >= 1

  bool holds() const { return bc_covers_dotted && sum_covers_areas && areas_cover_circle; }
};

VennChain venn_bound_chain(const TripletWeights& weights);
bool venn_bound_check(const TripletWeights& weights);

struct ScanPoint {
  double theta_a = 0.0;
  double theta_b = 0.0;
  double theta_c = 0.0;
  double bell_sum = 0.0;
};

struct ScanResult {
  std::vector<ScanPoint> grid;
  double min_sum = 0.0;
  ScanPoint argmin;
};

/// Quantum Bell sum for |Phi+> over every (theta_b, theta_c) drawn from
/// `theta_grid`, with theta_a = 0. Only the angle differences matter, so the
/// third angle is redundant. Ties keep the first point in grid order.
/// Throws InvalidArgument on an empty grid or non-finite angle.
ScanResult scan_angles(std::span<const double> theta_grid);

/// Angles k * step_deg for k = 0, 1, ... while below 360 degrees, returned in
/// radians. A step of 360 degrees or more yields {0}. Throws InvalidArgument
/// unless the step is finite and positive.
std::vector<double> degree_grid(double step_deg);

/// Rescans a square of half-width `half_width` around the incumbent minimum
/// at spacing `step` and returns the merged result.
ScanResult refine_scan(const ScanResult& coarse, double half_width, double step);

/// Columns: theta_b_deg,theta_c_deg,bell_sum
void write_scan_csv(std::ostream& out, const ScanResult& result);

}  // namespace bellmp
