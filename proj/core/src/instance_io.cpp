#include "mclp/instance_io.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mclp/errors.hpp"
#include "mclp/json_writer.hpp"

namespace mclp {

namespace {

using nlohmann::json;

const json& require_key(const json& obj, const char* key, const std::string& at) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(at + key + ": missing required key");
  return *it;
}

double require_finite_number(const json& value, const std::string& at) {
  if (!value.is_number()) throw SchemaError(at + ": must be a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw SchemaError(at + ": must be finite");
  return v;
}

std::int64_t require_integer(const json& value, const std::string& at) {
  if (!value.is_number_integer()) throw SchemaError(at + ": must be an integer");
  return value.get<std::int64_t>();
}

}  // namespace

Instance parse_instance(const std::string& bytes) {
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("top level: must be an object");

  Instance inst;
  inst.radius = require_finite_number(require_key(root, "radius", ""), "radius");

  const std::int64_t budget = require_integer(require_key(root, "budget", ""), "budget");
  if (budget < INT32_MIN || budget > INT32_MAX)
    throw SchemaError("budget: out of integer range");
  inst.budget = static_cast<std::int32_t>(budget);

  const json& mode = require_key(root, "budget_mode", "");
  if (!mode.is_string()) throw SchemaError("budget_mode: must be a string");
  const std::string mode_str = mode.get<std::string>();
  if (mode_str == "at_most") {
    inst.budget_mode = BudgetMode::AtMost;
  } else if (mode_str == "exactly") {
    inst.budget_mode = BudgetMode::Exactly;
  } else {
    throw SchemaError("budget_mode: must be \"at_most\" or \"exactly\"");
  }

  const json& demands = require_key(root, "demand_points", "");
  if (!demands.is_array()) throw SchemaError("demand_points: must be an array");
  for (std::size_t i = 0; i < demands.size(); ++i) {
    const std::string at = "demand_points[" + std::to_string(i) + "]";
    const json& d = demands[i];
    if (!d.is_object()) throw SchemaError(at + ": must be an object");
    DemandPoint point;
    point.id = static_cast<std::int32_t>(i);
    point.x = require_finite_number(require_key(d, "x", at + "."), at + ".x");
    point.y = require_finite_number(require_key(d, "y", at + "."), at + ".y");
    point.weight = require_finite_number(require_key(d, "weight", at + "."), at + ".weight");
    if (point.weight < 0.0)
      throw InvariantError(at + ".weight: must be >= 0");
    inst.demand_points.push_back(point);
  }

  const json& sites = require_key(root, "sites", "");
  if (!sites.is_array()) throw SchemaError("sites: must be an array");
  for (std::size_t j = 0; j < sites.size(); ++j) {
    const std::string at = "sites[" + std::to_string(j) + "]";
    const json& s = sites[j];
    if (!s.is_object()) throw SchemaError(at + ": must be an object");
    FacilitySite site;
    site.id = static_cast<std::int32_t>(j);
    site.x = require_finite_number(require_key(s, "x", at + "."), at + ".x");
    site.y = require_finite_number(require_key(s, "y", at + "."), at + ".y");
    inst.sites.push_back(site);
  }

  inst.validate();  // throws InvariantError naming the field
  return inst;
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"budget\": " << instance.budget << ",\n";
  out << "  \"budget_mode\": \"" << to_string(instance.budget_mode) << "\",\n";
  out << "  \"demand_points\": [\n";
  for (std::size_t i = 0; i < instance.demand_points.size(); ++i) {
    const DemandPoint& d = instance.demand_points[i];
    out << "    {\"weight\": " << format_double(d.weight) << ", \"x\": " << format_double(d.x)
        << ", \"y\": " << format_double(d.y) << '}'
        << (i + 1 < instance.demand_points.size() ? ",\n" : "\n");
  }
  out << "  ],\n";
  out << "  \"radius\": " << format_double(instance.radius) << ",\n";
  out << "  \"sites\": [\n";
  for (std::size_t j = 0; j < instance.sites.size(); ++j) {
    const FacilitySite& s = instance.sites[j];
    out << "    {\"x\": " << format_double(s.x) << ", \"y\": " << format_double(s.y) << '}'
        << (j + 1 < instance.sites.size() ? ",\n" : "\n");
  }
  out << "  ]\n";
  out << "}\n";
  return out.str();
}

}  // namespace mclp
