#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace adia_cli {

// Validates `doc` against the subset of JSON Schema used by the config file:
// type (single or list), enum, minimum, exclusiveMinimum, exclusiveMaximum,
// items, properties, additionalProperties = false and required. Returns the
// list of violations, empty when the document conforms.
std::vector<std::string> validate_schema(const nlohmann::json& schema, const nlohmann::json& doc,
                                         const std::string& path = "$");

// The schema shipped in docs/config.schema.json.
const nlohmann::json& config_schema();

}  // namespace adia_cli
