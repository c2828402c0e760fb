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

#include "bellmp/quantum.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bellmp {

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
}  // namespace

double TwoQubitState::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amp) total += std::norm(a);
  return total;
}

bool TwoQubitState::is_normalized(double tolerance) const {
  return std::abs(norm_squared() - 1.0) <= tolerance;
}

TwoQubitState make_phi_plus() {
  constexpr double r = kInvSqrt2;
  return {{Complex{r, 0.0}, Complex{}, Complex{}, Complex{r, 0.0}}};
}

TwoQubitState make_product_state(Bit x1, Bit x2) {
  if (x1 > 1 || x2 > 1) throw InvalidArgument("product state bits must be 0 or 1");
  TwoQubitState s;
  s.amp[2 * x1 + x2] = 1.0;
  return s;
}

MeasurementBasis basis_from_angle(double theta, std::string label) {
  if (!std::isfinite(theta)) throw InvalidArgument("basis angle must be finite");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {theta, {c, s}, {s, -c}, std::move(label)};
}

std::array<MeasurementBasis, 3> trine_bases() {
  constexpr double third = 2.0 * std::numbers::pi / 3.0;
  return {basis_from_angle(0.0, "A"), basis_from_angle(third, "B"),
          basis_from_angle(-third, "C")};
}

namespace {

void require_normalized(const TwoQubitState& state) {
  const double n = state.norm_squared();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kNormalizationGate) {
    throw InvalidState("state is not normalized (squared norm " + std::to_string(n) + ")");
  }
}

// <k1 (x) k2 | state> for real single-qubit kets.
Complex overlap(const std::array<double, 2>& k1, const std::array<double, 2>& k2,
                const TwoQubitState& state) {
  Complex total{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) total += k1[i] * k2[j] * state.amp[2 * i + j];
  }
  return total;
}

}  // namespace

JointOutcomeDistribution joint_distribution(const TwoQubitState& state,
                                            const MeasurementBasis& basis1,
                                            const MeasurementBasis& basis2) {
  require_normalized(state);
  JointOutcomeDistribution out;
  out.settings = {basis1.label, basis2.label};
  for (Bit x = 0; x < 2; ++x) {
    for (Bit y = 0; y < 2; ++y) out.p[x][y] = std::norm(overlap(basis1.ket(x), basis2.ket(y), state));
  }
  return out;
}

double p_same(const TwoQubitState& state, const MeasurementBasis& basis1,
              const MeasurementBasis& basis2) {
  return joint_distribution(state, basis1, basis2).same();
}

CorrelationRecord bell_record(const TwoQubitState& state, const MeasurementBasis& a,
                              const MeasurementBasis& b, const MeasurementBasis& c) {
  return CorrelationRecord::from_pairs(p_same(state, a, b), p_same(state, a, c),
                                       p_same(state, b, c));
}

bool verify_schmidt_invariance(const TwoQubitState& state, const MeasurementBasis& basis,
                               double tolerance) {
  std::array<Complex, 4> target{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      target[2 * i + j] = (basis.ket0[i] * basis.ket0[j] + basis.ket1[i] * basis.ket1[j]) *
                          kInvSqrt2;
    }
  }
  Complex inner{};
  for (std::size_t k = 0; k < 4; ++k) inner += std::conj(target[k]) * state.amp[k];
  if (std::abs(inner) == 0.0) return false;
  // The phase minimizing |state - e^{i phi} target| is arg <target|state>.
  const Complex phase = inner / std::abs(inner);
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(state.amp[k] - phase * target[k]) > tolerance) return false;
  }
  return true;
}

}  // namespace bellmp
