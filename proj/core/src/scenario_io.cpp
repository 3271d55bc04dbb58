// Copyright 2026 The dsfuse Authors.
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

#include "dsfuse/scenario_io.hpp"

#include <cstdint>
#include <cstdio>
#include <set>
#include <utility>
#include <vector>

#include "json.hpp"

namespace dsfuse {

namespace {

using nlohmann::json;

Error Schema(const std::string& message) {
  return Error(ErrorCode::kSchemaError, message);
}

Error Invalid(const std::string& message) {
  return Error(ErrorCode::kValidationError, message);
}

ParseError ParseFailure(std::string_view text, std::size_t byte,
                        const std::string& detail) {
  // nlohmann reports the 1-based byte offset of the offending character.
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t stop = byte == 0 ? 0 : std::min(byte - 1, text.size());
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++column;
    }
  }
  return ParseError(line, column, detail);
}

std::vector<std::string> StringArray(const json& node, const std::string& where) {
  if (!node.is_array()) throw Schema(where + " must be an array of strings");
  std::vector<std::string> out;
  out.reserve(node.size());
  for (const auto& item : node) {
    if (!item.is_string()) throw Schema(where + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

const json& Field(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw Schema(where + " is missing \"" + key + "\"");
  }
  return *it;
}

void RejectUnknownKeys(const json& object, const std::set<std::string>& allowed,
                       const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) {
      throw Schema(where + " has unknown key \"" + key + "\"");
    }
  }
}

}  // namespace

Scenario ParseScenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseFailure(text, e.byte, e.what());
  }

  if (!doc.is_object()) throw Schema("document must be a JSON object");
  RejectUnknownKeys(doc, {"name", "frame", "descriptions", "sources"}, "document");

  std::string name;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw Schema("\"name\" must be a string");
    name = it->get<std::string>();
  }
  std::vector<std::string> labels = StringArray(Field(doc, "frame", "document"), "\"frame\"");
  std::vector<std::string> descriptions;
  if (auto it = doc.find("descriptions"); it != doc.end()) {
    descriptions = StringArray(*it, "\"descriptions\"");
  }

  const json& sources = Field(doc, "sources", "document");
  if (!sources.is_array()) throw Schema("\"sources\" must be an array");
  if (sources.empty()) throw Schema("\"sources\" is empty");

  struct RawSource {
    std::string name;
    std::vector<std::string> focal;
    std::vector<double> bpa;
  };
  std::vector<RawSource> raw;
  raw.reserve(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const json& src = sources[i];
    const std::string where = "source #" + std::to_string(i + 1);
    if (!src.is_object()) throw Schema(where + " must be an object");
    RejectUnknownKeys(src, {"name", "focal", "bpa"}, where);
    const json& src_name = Field(src, "name", where);
    if (!src_name.is_string()) throw Schema(where + " \"name\" must be a string");
    RawSource r;
    r.name = src_name.get<std::string>();
    r.focal = StringArray(Field(src, "focal", where), where + " \"focal\"");
    const json& bpa = Field(src, "bpa", where);
    if (!bpa.is_array()) throw Schema(where + " \"bpa\" must be an array of numbers");
    for (const auto& w : bpa) {
      if (!w.is_number()) throw Schema(where + " \"bpa\" must be an array of numbers");
      r.bpa.push_back(w.get<double>());
    }
    if (r.bpa.empty()) throw Schema(where + " \"bpa\" is empty");
    if (!raw.empty() && r.bpa.size() != raw.front().bpa.size()) {
      throw Schema(where + " has " + std::to_string(r.bpa.size()) +
                   " bpa values, expected " +
                   std::to_string(raw.front().bpa.size()));
    }
    raw.push_back(std::move(r));
  }

  try {
    Frame frame = MakeFrame(std::move(labels));
    std::vector<Motion> motions;
    motions.reserve(raw.size());
    for (const auto& r : raw) {
      motions.push_back({r.name, frame.SubsetOf(r.focal)});
    }
    std::vector<std::vector<double>> bpa(raw.front().bpa.size(),
                                         std::vector<double>(raw.size()));
    for (std::size_t m = 0; m < raw.size(); ++m) {
      for (std::size_t c = 0; c < bpa.size(); ++c) bpa[c][m] = raw[m].bpa[c];
    }
    return Scenario::Create(std::move(frame), std::move(motions), std::move(bpa),
                            std::move(descriptions), std::move(name));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kValidationError) throw;
    throw Invalid(e.what());
  }
}

std::string EmitScenario(const Scenario& s) {
  using ordered = nlohmann::ordered_json;
  ordered doc = ordered::object();
  if (!s.name().empty()) doc["name"] = s.name();
  doc["frame"] = std::vector<std::string>(s.frame().labels().begin(),
                                          s.frame().labels().end());
  if (!s.descriptions().empty()) doc["descriptions"] = s.descriptions();
  ordered sources = ordered::array();
  for (std::size_t m = 0; m < s.motions().size(); ++m) {
    ordered bpa = ordered::array();
    for (std::size_t c = 1; c <= s.condition_count(); ++c) {
      bpa.push_back(s.weight(c, m));
    }
    sources.push_back({{"name", s.motions()[m].name},
                       {"focal", s.motions()[m].direction.Labels()},
                       {"bpa", std::move(bpa)}});
  }
  doc["sources"] = std::move(sources);
  return doc.dump(2) + "\n";
}

std::string ScenarioHash(const Scenario& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : EmitScenario(s)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dsfuse
