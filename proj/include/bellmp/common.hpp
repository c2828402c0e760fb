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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bellmp {

// Tolerances shared across the library.
inline constexpr double kProbabilityTolerance = 1e-12;
inline constexpr double kNormalizationGate = 1e-9;
inline constexpr double kSupportThreshold = 1e-12;
inline constexpr double kDeterminismTolerance = 1e-10;
inline constexpr double kFactorizationTolerance = 1e-10;

class InvalidArgument : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class InvalidState : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class InvalidDistribution : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, std::string message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        field_(std::move(field)),
        message_(std::move(message)) {}

  /// Location of the offending entry, e.g. `lambdas[2].weight` or
  /// `line 4, column 7`.
  const std::string& field() const noexcept { return field_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string field_;
  std::string message_;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Bit = std::uint8_t;

/// The three two-valued properties that can be measured on either object.
enum class Setting : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<Setting, 3> kAllSettings = {Setting::A, Setting::B, Setting::C};

inline constexpr std::size_t index_of(Setting s) noexcept { return static_cast<std::size_t>(s); }

inline constexpr char setting_name(Setting s) noexcept {
  switch (s) {
    case Setting::A: return 'A';
    case Setting::B: return 'B';
    case Setting::C: return 'C';
  }
  return '?';
}

/// Parses "A", "B" or "C" (case-insensitive). Throws InvalidArgument otherwise.
Setting parse_setting(std::string_view text);

/// Agreement probabilities for the three setting pairs and their sum, the
/// left-hand side of the Bell inequality.
struct CorrelationRecord {
  double p_same_ab = 0.0;
  double p_same_ac = 0.0;
  double p_same_bc = 0.0;
  double bell_sum = 0.0;

  static CorrelationRecord from_pairs(double ab, double ac, double bc) {
    return {ab, ac, bc, ab + ac + bc};
  }

  bool operator==(const CorrelationRecord&) const = default;
};

}  // namespace bellmp
