// Minimal structural validator for the JSON artifact schemas shipped under
// schemas/. Supports the subset the artifacts use: type, required,
// properties, items.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace psmoa {

namespace detail {

inline bool type_matches(const nlohmann::json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "number") return value.is_number();
    if (type == "integer") return value.is_number_integer();
    if (type == "boolean") return value.is_boolean();
    return false;
}

inline void validate_schema_node(const nlohmann::json& value, const nlohmann::json& schema,
                                 const std::string& path, std::vector<std::string>& errors) {
    if (schema.contains("type")) {
        const std::string type = schema["type"].get<std::string>();
        if (!type_matches(value, type)) {
            errors.push_back(path + ": expected " + type);
            return;
        }
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"]) {
            const std::string k = key.get<std::string>();
            if (!value.contains(k)) errors.push_back(path + ": missing required key '" + k + "'");
        }
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema["properties"].items())
            if (value.contains(key)) validate_schema_node(value[key], sub, path + "." + key, errors);
    if (schema.contains("items") && value.is_array())
        for (std::size_t i = 0; i < value.size(); ++i)
            validate_schema_node(value[i], schema["items"], path + "[" + std::to_string(i) + "]",
                                 errors);
}

}  // namespace detail

inline std::vector<std::string> schema_errors(const nlohmann::json& value,
                                              const nlohmann::json& schema) {
    std::vector<std::string> errors;
    detail::validate_schema_node(value, schema, "$", errors);
    return errors;
}

inline bool matches_schema(const nlohmann::json& value, const nlohmann::json& schema) {
    return schema_errors(value, schema).empty();
}

}  // namespace psmoa
