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

#include <filesystem>
#include <string>
#include <string_view>

#include "bellmp/lhv.hpp"

namespace bellmp {

// Model files are JSON documents in one of two forms.
//
// Long form, one entry per lambda with [P(0), P(1)] for each setting:
//   {"objects": 2, "settings": ["A", "B", "C"],
//    "lambdas": [{"id": "l0", "weight": 0.5,
//                 "p1": {"A": [1, 0], "B": [0.5, 0.5], "C": [0, 1]},
//                 "p2": {"A": [1, 0], "B": [0.5, 0.5], "C": [0, 1]}}]}
//
// Triplet shorthand, expanded with model_from_triplet_distribution:
//   {"triplets": {"001": 0.2, "110": 0.8}}
//
// Weights and table entries may be given as JSON numbers or as decimal
// strings.

/// Throws ParseError with a line/column or field path on malformed input, and
/// InvalidDistribution (naming the lambda entry) on validation failure.
LhvModel parse_model(std::string_view text);

LhvModel load_model(const std::filesystem::path& path);

/// Long-form document. Numbers are written with shortest round-trip
/// precision, so parse_model(serialize_model(m)) == m bit for bit.
std::string serialize_model(const LhvModel& model);

void save_model(const LhvModel& model, const std::filesystem::path& path);

}  // namespace bellmp
