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
#include <complex>
#include <string>
#include <utility>

#include "bellmp/common.hpp"

namespace bellmp {

using Complex = std::complex<double>;

/// Pure two-qubit state. Amplitudes are stored big-endian with the first
/// object as the high bit: index 2*x1 + x2 holds the coefficient of |x1 x2>.
struct TwoQubitState {
  std::array<Complex, 4> amp{};

  const Complex& amplitude(Bit x1, Bit x2) const { return amp[2 * x1 + x2]; }
  double norm_squared() const;
  bool is_normalized(double tolerance = kNormalizationGate) const;
};

/// (|00> + |11>) / sqrt(2)
TwoQubitState make_phi_plus();

/// The computational basis state |x1 x2>.
TwoQubitState make_product_state(Bit x1, Bit x2);

/// Equatorial single-qubit basis at angle theta:
///   ket0 = ( cos(theta/2),  sin(theta/2) )
///   ket1 = ( sin(theta/2), -cos(theta/2) )
/// theta = 0 is the computational basis. ket1 is fixed with this sign so
/// results are reproducible bit for bit; only the rays matter for
/// probabilities.
struct MeasurementBasis {
  double theta = 0.0;
  std::array<double, 2> ket0{1.0, 0.0};
  std::array<double, 2> ket1{0.0, -1.0};
  std::string label;

  const std::array<double, 2>& ket(Bit outcome) const { return outcome == 0 ? ket0 : ket1; }
};

MeasurementBasis basis_from_angle(double theta, std::string label);

/// Bases for A, B, C at 0, 2pi/3 and -2pi/3 (the trine).
std::array<MeasurementBasis, 3> trine_bases();

struct JointOutcomeDistribution {
  // p[x][x'] is the probability that object 1 yields x and object 2 yields x'.
  std::array<std::array<double, 2>, 2> p{};
  std::pair<std::string, std::string> settings;

  double same() const { return p[0][0] + p[1][1]; }
};

/// Born-rule joint outcome probabilities. Throws InvalidState when the
/// state's squared norm deviates from 1 by more than 1e-9.
JointOutcomeDistribution joint_distribution(const TwoQubitState& state,
                                            const MeasurementBasis& basis1,
                                            const MeasurementBasis& basis2);

/// Probability that the two objects give equal outcomes.
double p_same(const TwoQubitState& state, const MeasurementBasis& basis1,
              const MeasurementBasis& basis2);

CorrelationRecord bell_record(const TwoQubitState& state, const MeasurementBasis& a,
                              const MeasurementBasis& b, const MeasurementBasis& c);

/// True iff `state` equals (ket0 ket0 + ket1 ket1)/sqrt(2) in `basis` up to a
/// global phase, comparing amplitude by amplitude after aligning the phase.
bool verify_schmidt_invariance(const TwoQubitState& state, const MeasurementBasis& basis,
                               double tolerance = 1e-10);

}  // namespace bellmp
