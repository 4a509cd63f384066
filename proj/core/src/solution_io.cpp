#include "mclp/solution_io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "mclp/analysis.hpp"
#include "mclp/errors.hpp"
#include "mclp/json_writer.hpp"

namespace mclp {

namespace {

using nlohmann::json;

void write_id_array(std::ostringstream& out, const std::vector<std::int32_t>& ids) {
  out << '[';
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k > 0) out << ", ";
    out << ids[k];
  }
  out << ']';
}

}  // namespace

std::string serialize_solution(const Solution& solution, const SolveStats& stats,
                               const CoverageStructure& coverage) {
  std::vector<std::int32_t> covered;
  solution.covered_mask.for_each_set_bit(
      [&](std::size_t i) { covered.push_back(static_cast<std::int32_t>(i)); });

  std::ostringstream out;
  out << "{\n";
  out << "  \"coverage_percent\": "
      << format_percent(coverage_percent(solution.objective, coverage)) << ",\n";
  out << "  \"covered\": ";
  write_id_array(out, covered);
  out << ",\n";
  out << "  \"exact\": " << (stats.exact ? "true" : "false") << ",\n";
  out << "  \"objective\": " << format_double_full(solution.objective) << ",\n";
  out << "  \"selected\": ";
  write_id_array(out, solution.selected);
  out << ",\n";
  out << "  \"solver_name\": \"" << json_escape(solution.solver_name) << "\",\n";
  out << "  \"stats\": {\"bound_prunes\": " << stats.bound_prunes
      << ", \"facilities_removed_preprocess\": " << stats.facilities_removed_preprocess
      << ", \"states_expanded\": " << stats.states_expanded
      << ", \"states_pruned_dominance\": " << stats.states_pruned_dominance << "}\n";
  out << "}\n";
  return out.str();
}

ParsedSolution parse_solution(const std::string& bytes, const Instance& instance) {
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw SchemaError("top level: must be an object");

  auto require = [&](const char* key) -> const json& {
    auto it = root.find(key);
    if (it == root.end()) throw SchemaError(std::string(key) + ": missing required key");
    return *it;
  };

  ParsedSolution parsed;
  const json& objective = require("objective");
  if (!objective.is_number()) throw SchemaError("objective: must be a number");
  parsed.solution.objective = objective.get<double>();
  if (!std::isfinite(parsed.solution.objective))
    throw SchemaError("objective: must be finite");

  const json& exact = require("exact");
  if (!exact.is_boolean()) throw SchemaError("exact: must be a boolean");
  parsed.exact = exact.get<bool>();

  const json& percent = require("coverage_percent");
  if (!percent.is_number()) throw SchemaError("coverage_percent: must be a number");
  parsed.coverage_percent = percent.get<double>();

  const json& name = require("solver_name");
  if (!name.is_string()) throw SchemaError("solver_name: must be a string");
  parsed.solution.solver_name = name.get<std::string>();

  const json& selected = require("selected");
  if (!selected.is_array()) throw SchemaError("selected: must be an array");
  for (std::size_t k = 0; k < selected.size(); ++k) {
    if (!selected[k].is_number_integer())
      throw SchemaError("selected[" + std::to_string(k) + "]: must be an integer");
    parsed.solution.selected.push_back(selected[k].get<std::int32_t>());
  }

  const json& covered = require("covered");
  if (!covered.is_array()) throw SchemaError("covered: must be an array");
  parsed.solution.covered_mask = Bitset(instance.num_demand_points());
  for (std::size_t k = 0; k < covered.size(); ++k) {
    if (!covered[k].is_number_integer())
      throw SchemaError("covered[" + std::to_string(k) + "]: must be an integer");
    const auto i = covered[k].get<std::int64_t>();
    if (i < 0 || i >= static_cast<std::int64_t>(instance.num_demand_points()))
      throw InvariantError("covered[" + std::to_string(k) + "]: demand id " +
                           std::to_string(i) + " out of range");
    parsed.solution.covered_mask.set(static_cast<std::size_t>(i));
  }
  return parsed;
}

}  // namespace mclp
