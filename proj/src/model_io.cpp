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

#include "bellmp/model_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bellmp {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double read_number(const json& value, const std::string& field) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    double out = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec == std::errc() && end == s.data() + s.size() && !s.empty()) return out;
    throw ParseError(field, "'" + s + "' is not a decimal number");
  }
  throw ParseError(field, "expected a number");
}

void reject_unknown_keys(const json& object, std::initializer_list<std::string_view> allowed,
                         const std::string& field) {
  for (const auto& [key, _] : object.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError(field.empty() ? key : field + "." + key, "unknown field");
  }
}

void read_table(const json& value, Object object, ResponseTable& table, const std::string& field) {
  if (!value.is_object()) throw ParseError(field, "expected an object with keys A, B, C");
  reject_unknown_keys(value, {"A", "B", "C"}, field);
  for (Setting s : kAllSettings) {
    const std::string key(1, setting_name(s));
    const std::string where = field + "." + key;
    if (!value.contains(key)) throw ParseError(where, "missing");
    const json& pair = value.at(key);
    if (!pair.is_array() || pair.size() != 2) throw ParseError(where, "expected [P(0), P(1)]");
    table.at(object, s, 0) = read_number(pair[0], where + "[0]");
    table.at(object, s, 1) = read_number(pair[1], where + "[1]");
  }
}

LhvModel read_triplets(const json& doc) {
  reject_unknown_keys(doc, {"triplets"}, "");
  const json& triplets = doc.at("triplets");
  if (!triplets.is_object() || triplets.empty()) {
    throw ParseError("triplets", "expected a non-empty object of triplet codes");
  }
  TripletWeights weights;
  for (const auto& [code, w] : triplets.items()) {
    const std::string field = "triplets." + code;
    PropertyTriplet t;
    try {
      t = PropertyTriplet::from_code(code);
    } catch (const InvalidArgument& e) {
      throw ParseError(field, e.what());
    }
    weights[t] = read_number(w, field);
  }
  return model_from_triplet_distribution(weights);
}

LhvModel read_long_form(const json& doc) {
  reject_unknown_keys(doc, {"objects", "settings", "lambdas"}, "");
  if (doc.contains("objects") && doc.at("objects") != json(2)) {
    throw ParseError("objects", "only two-object models are supported");
  }
  if (doc.contains("settings") && doc.at("settings") != json({"A", "B", "C"})) {
    throw ParseError("settings", "expected [\"A\", \"B\", \"C\"]");
  }
  if (!doc.contains("lambdas")) throw ParseError("lambdas", "missing");
  const json& lambdas = doc.at("lambdas");
  if (!lambdas.is_array()) throw ParseError("lambdas", "expected an array");

  LhvModel model;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const std::string field = "lambdas[" + std::to_string(i) + "]";
    const json& entry = lambdas[i];
    if (!entry.is_object()) throw ParseError(field, "expected an object");
    reject_unknown_keys(entry, {"id", "weight", "p1", "p2"}, field);
    for (const char* key : {"id", "weight", "p1", "p2"}) {
      if (!entry.contains(key)) throw ParseError(field + "." + key, "missing");
    }
    if (!entry.at("id").is_string()) throw ParseError(field + ".id", "expected a string");
    HiddenState h;
    h.id = entry.at("id").get<std::string>();
    h.weight = read_number(entry.at("weight"), field + ".weight");
    read_table(entry.at("p1"), Object::First, h.response, field + ".p1");
    read_table(entry.at("p2"), Object::Second, h.response, field + ".p2");
    model.lambdas.push_back(std::move(h));
  }
  validate_model(model);
  return model;
}

}  // namespace

LhvModel parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(line_column(text, byte), "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("", "model document must be a JSON object");
  return doc.contains("triplets") ? read_triplets(doc) : read_long_form(doc);
}

LhvModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_model(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + (e.field().empty() ? "" : ": " + e.field()), e.message());
  }
}

std::string serialize_model(const LhvModel& model) {
  nlohmann::ordered_json doc;
  doc["objects"] = 2;
  doc["settings"] = {"A", "B", "C"};
  doc["lambdas"] = nlohmann::ordered_json::array();
  for (const HiddenState& h : model.lambdas) {
    nlohmann::ordered_json entry;
    entry["id"] = h.id;
    entry["weight"] = h.weight;
    for (auto object : {Object::First, Object::Second}) {
      nlohmann::ordered_json table;
      for (Setting s : kAllSettings) {
        table[std::string(1, setting_name(s))] = {h.response.at(object, s, 0), h.response.at(object, s, 1)};
      }
      entry[object == Object::First ? "p1" : "p2"] = std::move(table);
    }
    doc["lambdas"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

void save_model(const LhvModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model file " + path.string());
  out << serialize_model(model);
  if (!out) throw IoError("failed writing model file " + path.string());
}

}  // namespace bellmp
