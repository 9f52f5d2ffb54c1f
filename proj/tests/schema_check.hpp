#pragma once

// Minimal JSON-schema checker covering the subset used by
// docs/report.schema.json: type, enum, required, properties,
// patternProperties, additionalProperties (boolean), items, pattern, oneOf.

#include <regex>
#include <string>

#include "json.hpp"

namespace tropmech::testing {

inline bool schema_valid(const nlohmann::json& schema, const nlohmann::json& value) {
  using nlohmann::json;
  if (schema.is_object() && schema.empty()) return true;

  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const auto& sub : schema.at("oneOf"))
      if (schema_valid(sub, value)) ++hits;
    return hits == 1;
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema.at("enum")) found = found || e == value;
    if (!found) return false;
  }
  if (schema.contains("type")) {
    const std::string t = schema.at("type").get<std::string>();
    if (t == "object" && !value.is_object()) return false;
    if (t == "array" && !value.is_array()) return false;
    if (t == "string" && !value.is_string()) return false;
    if (t == "boolean" && !value.is_boolean()) return false;
    if (t == "integer" && !value.is_number_integer() && !value.is_number_unsigned()) return false;
    if (t == "number" && !value.is_number()) return false;
  }
  if (schema.contains("pattern") && value.is_string()) {
    std::regex re(schema.at("pattern").get<std::string>());
    if (!std::regex_search(value.get<std::string>(), re)) return false;
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema.at("required"))
        if (!value.contains(key.get<std::string>())) return false;
    for (const auto& [key, member] : value.items()) {
      bool matched = false;
      if (schema.contains("properties") && schema.at("properties").contains(key)) {
        matched = true;
        if (!schema_valid(schema.at("properties").at(key), member)) return false;
      }
      if (schema.contains("patternProperties")) {
        for (const auto& [pat, sub] : schema.at("patternProperties").items()) {
          if (std::regex_search(key, std::regex(pat))) {
            matched = true;
            if (!schema_valid(sub, member)) return false;
          }
        }
      }
      if (!matched && schema.contains("additionalProperties") &&
          schema.at("additionalProperties").is_boolean() &&
          !schema.at("additionalProperties").get<bool>())
        return false;
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (const auto& item : value)
      if (!schema_valid(schema.at("items"), item)) return false;
  }
  return true;
}

}  // namespace tropmech::testing
