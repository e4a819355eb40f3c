#ifndef BOMEGA_TESTS_SCHEMA_CHECK_HPP_
#define BOMEGA_TESTS_SCHEMA_CHECK_HPP_

// Just enough of JSON Schema for the schemas this project ships: type,
// required, properties, additionalProperties, items, enum, minimum.

#include <fstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

inline void validate_into(const json& value, const json& schema,
                          const std::string& path,
                          std::vector<std::string>& errors) {
  if (schema.contains("type")
      && !type_matches(value, schema["type"].get<std::string>())) {
    errors.push_back(path + ": expected type "
                     + schema["type"].get<std::string>());
    return;
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const json& candidate : schema["enum"]) {
      hit = hit || candidate == value;
    }
    if (!hit) {
      errors.push_back(path + ": value not in enum");
    }
  }
  if (schema.contains("minimum") && value.is_number()
      && value.get<double>() < schema["minimum"].get<double>()) {
    errors.push_back(path + ": below minimum");
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const json& key : schema["required"]) {
        if (!value.contains(key.get<std::string>())) {
          errors.push_back(path + ": missing required key "
                           + key.get<std::string>());
        }
      }
    }
    const json props =
        schema.contains("properties") ? schema["properties"] : json::object();
    const bool extra_ok = !schema.contains("additionalProperties")
                          || schema["additionalProperties"].get<bool>();
    for (const auto& [key, sub] : value.items()) {
      if (props.contains(key)) {
        validate_into(sub, props[key], path + "." + key, errors);
      } else if (!extra_ok) {
        errors.push_back(path + ": unexpected key " + key);
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      validate_into(value[i], schema["items"],
                    path + "[" + std::to_string(i) + "]", errors);
    }
  }
}

inline std::vector<std::string> validate(const json& value,
                                         const json& schema) {
  std::vector<std::string> errors;
  validate_into(value, schema, "$", errors);
  return errors;
}

inline json load_schema(const std::string& name) {
  const std::string path =
      std::string(BOMEGA_REPO_ROOT) + "/schemas/" + name;
  std::ifstream in(path);
  REQUIRE_MESSAGE(bool(in), "cannot open schema ", path);
  return json::parse(in);
}

}  // namespace schema_check

#endif  // BOMEGA_TESTS_SCHEMA_CHECK_HPP_
