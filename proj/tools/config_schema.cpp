#include "config_schema.hpp"

namespace adia_cli {

namespace {

bool has_type(const nlohmann::json& v, const std::string& t) {
  if (t == "number") return v.is_number();
  if (t == "integer") return v.is_number_integer();
  if (t == "string") return v.is_string();
  if (t == "array") return v.is_array();
  if (t == "object") return v.is_object();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

}  // namespace

std::vector<std::string> validate_schema(const nlohmann::json& schema, const nlohmann::json& doc,
                                         const std::string& path) {
  std::vector<std::string> errs;
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_string()) ok = has_type(doc, t.get<std::string>());
    else
      for (const auto& alt : t) ok = ok || has_type(doc, alt.get<std::string>());
    if (!ok) {
      errs.push_back(path + ": expected type " + t.dump());
      return errs;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == doc;
    if (!found) errs.push_back(path + ": value not in " + schema["enum"].dump());
  }
  if (doc.is_number()) {
    const double v = doc.get<double>();
    if (schema.contains("minimum") && v < schema["minimum"].get<double>())
      errs.push_back(path + ": below minimum " + schema["minimum"].dump());
    if (schema.contains("exclusiveMinimum") && v <= schema["exclusiveMinimum"].get<double>())
      errs.push_back(path + ": must exceed " + schema["exclusiveMinimum"].dump());
    if (schema.contains("exclusiveMaximum") && v >= schema["exclusiveMaximum"].get<double>())
      errs.push_back(path + ": must be below " + schema["exclusiveMaximum"].dump());
  }
  if (doc.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      auto sub = validate_schema(schema["items"], doc[i], path + "[" + std::to_string(i) + "]");
      errs.insert(errs.end(), sub.begin(), sub.end());
    }
  }
  if (doc.is_object()) {
    const auto props = schema.value("properties", nlohmann::json::object());
    for (const auto& [key, val] : doc.items()) {
      if (props.contains(key)) {
        auto sub = validate_schema(props[key], val, path + "." + key);
        errs.insert(errs.end(), sub.begin(), sub.end());
      } else if (schema.contains("additionalProperties") && schema["additionalProperties"] == false) {
        errs.push_back(path + ": unknown key " + key);
      }
    }
    if (schema.contains("required"))
      for (const auto& r : schema["required"])
        if (!doc.contains(r.get<std::string>())) errs.push_back(path + ": missing key " + r.get<std::string>());
  }
  return errs;
}

const nlohmann::json& config_schema() {
  static const nlohmann::json schema = nlohmann::json::parse(
#include "config_schema.inc"
  );
  return schema;
}

}  // namespace adia_cli
