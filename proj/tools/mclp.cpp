// Command-line front end: instance generation, solving, sensitivity sweeps,
// solver comparison, and solution validation. All data goes to files or
// stdout, all diagnostics to stderr. Exit codes: 0 success, 1 usage error,
// 2 data/validation error, 3 solver cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mclp/analysis.hpp"
#include "mclp/errors.hpp"
#include "mclp/generator.hpp"
#include "mclp/instance_io.hpp"
#include "mclp/json_writer.hpp"
#include "mclp/random.hpp"
#include "mclp/report_io.hpp"
#include "mclp/solution_io.hpp"
#include "mclp/solver.hpp"
#include "mclp/version.hpp"

namespace {

using namespace mclp;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << bytes;
}

/// Emits data to the output file when one was given, otherwise to stdout.
void emit(const std::optional<std::string>& path, const std::string& bytes) {
  if (path) {
    write_file(*path, bytes);
  } else {
    std::cout << bytes;
  }
}

/// Every file-producing run leaves a manifest next to its primary output
/// (or at --manifest) echoing the fully resolved parameters, so the run can
/// be reproduced from the manifest alone.
void write_manifest(const std::optional<std::string>& output,
                    const std::optional<std::string>& manifest_path,
                    const std::string& command, const std::string& config_echo,
                    const std::vector<std::string>& artifacts) {
  std::optional<std::string> path = manifest_path;
  if (!path && output) path = *output + ".manifest.json";
  if (!path) return;

  std::ostringstream out;
  out << "{\n  \"artifact_paths\": [";
  for (std::size_t k = 0; k < artifacts.size(); ++k)
    out << (k ? ", " : "") << '"' << json_escape(artifacts[k]) << '"';
  out << "],\n";
  out << "  \"command\": \"" << json_escape(command) << "\",\n";
  out << "  \"config_echo\": " << config_echo << ",\n";
  out << "  \"tool_version\": \"" << kVersion << "\"\n";
  out << "}\n";
  write_file(*path, out.str());
}

BudgetMode parse_budget_mode(const std::string& s) {
  if (s == "at_most") return BudgetMode::AtMost;
  if (s == "exactly") return BudgetMode::Exactly;
  throw ConfigError("budget_mode: must be \"at_most\" or \"exactly\"");
}

SolverKind parse_solver(const std::string& s) {
  if (s == "dp") return SolverKind::Dp;
  if (s == "greedy") return SolverKind::Greedy;
  if (s == "brute") return SolverKind::Brute;
  throw ConfigError("solver: must be dp, greedy or brute");
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateArgs {
  GeneratorConfig config;
  std::string budget_mode = "at_most";
  std::string distribution = "uniform";
  std::optional<std::int32_t> budget;
  std::optional<double> budget_fraction;
  std::vector<double> weight_range{1.0, 10.0};
  std::optional<std::string> config_file;
  std::optional<std::string> output;
  std::optional<std::string> manifest;
};

GeneratorConfig resolve_generator_config(GenerateArgs& args) {
  if (args.config_file) {
    nlohmann::json root;
    try {
      root = nlohmann::json::parse(read_file(*args.config_file));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid JSON config: ") + e.what());
    }
    GeneratorConfig c;
    if (root.contains("n")) c.n = root["n"].get<std::int32_t>();
    if (root.contains("m")) c.m = root["m"].get<std::int32_t>();
    if (root.contains("budget")) c.budget = root["budget"].get<std::int32_t>();
    if (root.contains("budget_fraction"))
      c.budget_fraction = root["budget_fraction"].get<double>();
    if (root.contains("budget_mode"))
      c.budget_mode = parse_budget_mode(root["budget_mode"].get<std::string>());
    if (root.contains("radius")) c.radius = root["radius"].get<double>();
    if (root.contains("distribution")) {
      const auto d = root["distribution"].get<std::string>();
      if (d != "uniform" && d != "clustered")
        throw ConfigError("distribution: must be \"uniform\" or \"clustered\"");
      c.distribution = d == "uniform" ? Distribution::Uniform : Distribution::Clustered;
    }
    if (root.contains("cluster_count"))
      c.cluster_count = root["cluster_count"].get<std::int32_t>();
    if (root.contains("cluster_spread"))
      c.cluster_spread = root["cluster_spread"].get<double>();
    if (root.contains("weight_range")) {
      const auto& wr = root["weight_range"];
      if (!wr.is_array() || wr.size() != 2)
        throw ConfigError("weight_range: must be [low, high]");
      c.weight_low = wr[0].get<double>();
      c.weight_high = wr[1].get<double>();
    }
    if (root.contains("area")) c.area = root["area"].get<double>();
    if (root.contains("seed")) c.seed = root["seed"].get<std::uint64_t>();
    if (!c.budget && !c.budget_fraction) c.budget_fraction = 0.3;
    return c;
  }

  GeneratorConfig c = args.config;
  c.budget = args.budget;
  c.budget_fraction = args.budget_fraction;
  if (!c.budget && !c.budget_fraction) c.budget_fraction = 0.3;
  c.budget_mode = parse_budget_mode(args.budget_mode);
  if (args.distribution == "uniform") {
    c.distribution = Distribution::Uniform;
  } else if (args.distribution == "clustered") {
    c.distribution = Distribution::Clustered;
  } else {
    throw ConfigError("distribution: must be \"uniform\" or \"clustered\"");
  }
  if (args.weight_range.size() != 2)
    throw ConfigError("weight_range: must be two values, low and high");
  c.weight_low = args.weight_range[0];
  c.weight_high = args.weight_range[1];
  return c;
}

std::string generator_config_echo(const GeneratorConfig& c) {
  std::ostringstream out;
  out << "{\"area\": " << format_double(c.area);
  if (c.budget) out << ", \"budget\": " << *c.budget;
  if (c.budget_fraction)
    out << ", \"budget_fraction\": " << format_double(*c.budget_fraction);
  out << ", \"budget_mode\": \"" << to_string(c.budget_mode) << "\""
      << ", \"cluster_count\": " << c.cluster_count
      << ", \"cluster_spread\": " << format_double(c.cluster_spread)
      << ", \"distribution\": \"" << to_string(c.distribution) << "\""
      << ", \"m\": " << c.m << ", \"n\": " << c.n
      << ", \"radius\": " << format_double(c.radius) << ", \"seed\": " << c.seed
      << ", \"weight_range\": [" << format_double(c.weight_low) << ", "
      << format_double(c.weight_high) << "]}";
  return out.str();
}

int run_generate(GenerateArgs& args) {
  const GeneratorConfig config = resolve_generator_config(args);
  const Instance instance = generate(config);
  emit(args.output, serialize_instance(instance));
  write_manifest(args.output, args.manifest, "generate", generator_config_echo(config),
                 args.output ? std::vector<std::string>{*args.output}
                             : std::vector<std::string>{});
  return 0;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string instance_path;
  std::string solver = "dp";
  SolverConfig config;
  bool use_preprocess = false;
  std::optional<std::string> budget_mode_override;
  std::optional<std::string> output;
  std::optional<std::string> manifest;
};

std::string solver_config_echo(const SolveArgs& args) {
  const SolverConfig& c = args.config;
  std::ostringstream out;
  out << "{\"budget_mode_override\": "
      << (args.budget_mode_override ? "\"" + *args.budget_mode_override + "\"" : "null")
      << ", \"dominance_pruning\": " << bool_str(c.enable_dominance_pruning)
      << ", \"facility_ordering\": " << bool_str(c.enable_facility_ordering)
      << ", \"greedy_bound\": " << bool_str(c.enable_greedy_bound)
      << ", \"input\": \"" << json_escape(args.instance_path) << "\""
      << ", \"preprocess\": " << bool_str(args.use_preprocess)
      << ", \"solver\": \"" << args.solver << "\""
      << ", \"state_limit\": " << c.state_limit
      << ", \"symmetry_merge\": " << bool_str(c.enable_symmetry_merge)
      << ", \"time_limit_seconds\": "
      << (c.time_limit_seconds ? format_double(*c.time_limit_seconds) : "null") << "}";
  return out.str();
}

int run_solve(SolveArgs& args) {
  Instance instance = parse_instance(read_file(args.instance_path));
  if (args.budget_mode_override)
    instance.budget_mode = parse_budget_mode(*args.budget_mode_override);

  const SolverKind kind = parse_solver(args.solver);
  const auto [solution, stats] = solve(instance, kind, args.config, args.use_preprocess);
  const CoverageStructure coverage = build_coverage(instance);

  emit(args.output, serialize_solution(solution, stats, coverage));
  std::cerr << "solver=" << solution.solver_name << " objective="
            << format_double_full(solution.objective)
            << " exact=" << bool_str(stats.exact)
            << " wall_time_s=" << format_double(stats.wall_time.count()) << "\n";
  write_manifest(args.output, args.manifest, "solve", solver_config_echo(args),
                 args.output ? std::vector<std::string>{*args.output}
                             : std::vector<std::string>{});
  return 0;
}

// ---------------------------------------------------------------------------
// sweeps
// ---------------------------------------------------------------------------

struct SweepArgs {
  std::string instance_path;
  std::vector<double> radii;
  std::vector<std::int32_t> budgets;
  std::string solver = "dp";
  SolverConfig config;
  bool use_preprocess = false;
  std::string format = "csv";
  std::optional<std::string> output;
  std::optional<std::string> manifest;
};

int run_sweep(SweepArgs& args, bool radius_mode) {
  const Instance instance = parse_instance(read_file(args.instance_path));
  const SolverKind kind = parse_solver(args.solver);
  const SweepReport report =
      radius_mode
          ? radius_sweep(instance, args.radii, kind, args.config, args.use_preprocess)
          : budget_sweep(instance, args.budgets, kind, args.config, args.use_preprocess);

  if (args.format != "csv" && args.format != "json")
    throw ConfigError("format: must be csv or json");
  emit(args.output, args.format == "csv" ? sweep_to_csv(report) : sweep_to_json(report));

  std::ostringstream echo;
  echo << "{\"format\": \"" << args.format << "\", \"input\": \""
       << json_escape(args.instance_path) << "\", \"preprocess\": "
       << bool_str(args.use_preprocess) << ", \"solver\": \"" << args.solver << "\", \"values\": [";
  if (radius_mode) {
    for (std::size_t k = 0; k < args.radii.size(); ++k)
      echo << (k ? ", " : "") << format_double(args.radii[k]);
  } else {
    for (std::size_t k = 0; k < args.budgets.size(); ++k)
      echo << (k ? ", " : "") << args.budgets[k];
  }
  echo << "]}";
  write_manifest(args.output, args.manifest,
                 radius_mode ? "sweep-radius" : "sweep-budget", echo.str(),
                 args.output ? std::vector<std::string>{*args.output}
                             : std::vector<std::string>{});
  return 0;
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

struct CompareArgs {
  std::vector<std::string> instance_paths;
  std::int32_t count = 0;
  std::uint64_t seed = 0;
  std::int32_t n_min = 10, n_max = 15;
  std::int32_t m_min = 5, m_max = 10;
  double radius_min = 10.0, radius_max = 30.0;
  double budget_fraction = 0.3;
  std::string distribution = "mixed";
  double area = 100.0;
  SolverConfig config;
  bool use_preprocess = false;
  std::string format = "csv";
  std::optional<std::string> output;
  std::optional<std::string> manifest;
};

std::vector<LabeledInstance> build_compare_batch(const CompareArgs& args) {
  std::vector<LabeledInstance> instances;
  if (!args.instance_paths.empty()) {
    for (const std::string& path : args.instance_paths)
      instances.push_back(LabeledInstance{path, parse_instance(read_file(path))});
    return instances;
  }
  if (args.count < 1)
    throw ConfigError("compare: give --instances or a batch spec with --count >= 1");
  if (args.n_min > args.n_max || args.m_min > args.m_max)
    throw ConfigError("compare: size ranges must satisfy min <= max");

  // Batch parameters are drawn from a dedicated stream so the batch is a
  // pure function of --seed.
  Xorshift64Star rng(args.seed);
  for (std::int32_t k = 0; k < args.count; ++k) {
    GeneratorConfig config;
    config.n = args.n_min +
               static_cast<std::int32_t>(rng.next_below(
                   static_cast<std::uint64_t>(args.n_max - args.n_min + 1)));
    config.m = args.m_min +
               static_cast<std::int32_t>(rng.next_below(
                   static_cast<std::uint64_t>(args.m_max - args.m_min + 1)));
    config.radius = rng.next_double(args.radius_min, args.radius_max);
    config.budget_fraction = args.budget_fraction;
    config.area = args.area;
    if (args.distribution == "uniform") {
      config.distribution = Distribution::Uniform;
    } else if (args.distribution == "clustered") {
      config.distribution = Distribution::Clustered;
    } else if (args.distribution == "mixed") {
      config.distribution = k % 2 == 0 ? Distribution::Uniform : Distribution::Clustered;
    } else {
      throw ConfigError("distribution: must be uniform, clustered or mixed");
    }
    config.cluster_count = 1 + static_cast<std::int32_t>(rng.next_below(4));
    config.seed = rng.next_u64();

    const Instance instance = generate(config);
    std::ostringstream label;
    label << 's' << config.seed << "_n" << config.n << "_m" << config.m << "_p"
          << instance.budget;
    instances.push_back(LabeledInstance{label.str(), instance});
  }
  return instances;
}

int run_compare(CompareArgs& args) {
  const std::vector<LabeledInstance> instances = build_compare_batch(args);
  const ComparisonReport report = compare_solvers(instances, args.config, args.use_preprocess);

  if (args.format != "csv" && args.format != "json")
    throw ConfigError("format: must be csv or json");
  emit(args.output,
       args.format == "csv" ? comparison_to_csv(report) : comparison_to_json(report));

  std::ostringstream echo;
  echo << "{\"area\": " << format_double(args.area)
       << ", \"budget_fraction\": " << format_double(args.budget_fraction)
       << ", \"count\": " << args.count << ", \"distribution\": \"" << args.distribution
       << "\", \"format\": \"" << args.format << "\", \"instances\": [";
  for (std::size_t k = 0; k < args.instance_paths.size(); ++k)
    echo << (k ? ", " : "") << '"' << json_escape(args.instance_paths[k]) << '"';
  echo << "], \"m_range\": [" << args.m_min << ", " << args.m_max << "], \"n_range\": ["
       << args.n_min << ", " << args.n_max << "], \"preprocess\": "
       << bool_str(args.use_preprocess) << ", \"radius_range\": ["
       << format_double(args.radius_min) << ", " << format_double(args.radius_max)
       << "], \"seed\": " << args.seed << "}";
  write_manifest(args.output, args.manifest, "compare", echo.str(),
                 args.output ? std::vector<std::string>{*args.output}
                             : std::vector<std::string>{});
  return 0;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int run_validate(const std::string& instance_path, const std::string& solution_path) {
  const Instance instance = parse_instance(read_file(instance_path));
  const CoverageStructure coverage = build_coverage(instance);
  const ParsedSolution parsed = parse_solution(read_file(solution_path), instance);

  ValidationReport report = validate_solution(parsed.solution, instance, coverage);

  // The stored percentage is printed at one decimal; recompute and compare
  // at that resolution.
  const double expected_percent = coverage_percent(parsed.solution.objective, coverage);
  if (std::abs(expected_percent - parsed.coverage_percent) > 0.05 + 1e-9)
    report.violations.push_back("coverage_percent: stored " +
                                format_double(parsed.coverage_percent) +
                                " but objective implies " +
                                format_double(expected_percent));

  if (report.ok()) {
    std::cout << "ok\n";
    return 0;
  }
  for (const std::string& v : report.violations) std::cout << v << "\n";
  return 2;
}

void add_solver_flags(CLI::App* cmd, std::string& solver, SolverConfig& config,
                      bool& use_preprocess) {
  cmd->add_option("--solver", solver, "Solver: dp, greedy or brute")
      ->default_val("dp")
      ->check(CLI::IsMember({"dp", "greedy", "brute"}));
  cmd->add_flag("--preprocess", use_preprocess,
                "Drop facilities whose coverage is contained in another's before solving");
  cmd->add_flag("!--no-dominance", config.enable_dominance_pruning,
                "Disable dominated-state pruning");
  cmd->add_flag("!--no-symmetry-merge", config.enable_symmetry_merge,
                "Disable identical-mask merging");
  cmd->add_flag("!--no-greedy-bound", config.enable_greedy_bound,
                "Disable the greedy incumbent and optimistic bound pruning");
  cmd->add_flag("!--no-facility-ordering", config.enable_facility_ordering,
                "Disable heaviest-first facility ordering");
  cmd->add_option("--state-limit", config.state_limit,
                  "Frontier cap; truncating marks the result exact=false");
  double time_limit = 0.0;
  auto* tl = cmd->add_option("--time-limit", time_limit,
                             "Wall-clock limit in seconds (checked between facilities)");
  cmd->parse_complete_callback([tl, &time_limit, &config]() {
    if (tl->count() > 0) config.time_limit_seconds = time_limit;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal-coverage facility location: exact DP solver, greedy "
               "heuristic, instance generator and sensitivity sweeps"};
  app.set_version_flag("--version", mclp::kVersion);
  app.require_subcommand(1);

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "Generate a seeded synthetic instance");
  gen->add_option("--n", gen_args.config.n, "Demand points")->default_val(10);
  gen->add_option("--m", gen_args.config.m, "Candidate sites")->default_val(5);
  auto* b = gen->add_option("--budget", gen_args.budget, "Facility budget p");
  gen->add_option("--budget-fraction", gen_args.budget_fraction,
                  "Budget as a fraction of m, ceil(f*m); default 0.3")
      ->excludes(b);
  gen->add_option("--budget-mode", gen_args.budget_mode, "at_most or exactly")
      ->default_val("at_most")
      ->check(CLI::IsMember({"at_most", "exactly"}));
  gen->add_option("--radius", gen_args.config.radius, "Service radius")->default_val(10.0);
  gen->add_option("--distribution", gen_args.distribution, "uniform or clustered")
      ->default_val("uniform")
      ->check(CLI::IsMember({"uniform", "clustered"}));
  gen->add_option("--cluster-count", gen_args.config.cluster_count,
                  "Cluster centers (clustered only)");
  gen->add_option("--cluster-spread", gen_args.config.cluster_spread,
                  "Gaussian sigma of cluster offsets");
  gen->add_option("--weight-range", gen_args.weight_range, "Demand weight low high")
      ->expected(2);
  gen->add_option("--area", gen_args.config.area, "Square side length")->default_val(100.0);
  gen->add_option("--seed", gen_args.config.seed, "64-bit seed")->default_val(0);
  gen->add_option("--config", gen_args.config_file,
                  "JSON file with generator fields (overrides other flags)");
  gen->add_option("-o,--output", gen_args.output, "Instance file (default stdout)");
  gen->add_option("--manifest", gen_args.manifest, "Manifest path");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("instance", solve_args.instance_path, "Instance JSON file")
      ->required();
  add_solver_flags(solve_cmd, solve_args.solver, solve_args.config,
                   solve_args.use_preprocess);
  solve_cmd->add_option("--budget-mode", solve_args.budget_mode_override,
                        "Override the instance budget mode: at_most or exactly")
      ->check(CLI::IsMember({"at_most", "exactly"}));
  solve_cmd->add_option("-o,--output", solve_args.output, "Solution file (default stdout)");
  solve_cmd->add_option("--manifest", solve_args.manifest, "Manifest path");

  SweepArgs radius_args;
  auto* sweep_radius = app.add_subcommand(
      "sweep-radius", "Coverage and efficiency across service radii");
  sweep_radius->add_option("instance", radius_args.instance_path, "Instance JSON file")
      ->required();
  sweep_radius->add_option("--radii", radius_args.radii, "Ascending radii")
      ->required()
      ->delimiter(',');
  add_solver_flags(sweep_radius, radius_args.solver, radius_args.config,
                   radius_args.use_preprocess);
  sweep_radius->add_option("--format", radius_args.format, "csv or json")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_radius->add_option("-o,--output", radius_args.output, "Report file (default stdout)");
  sweep_radius->add_option("--manifest", radius_args.manifest, "Manifest path");

  SweepArgs budget_args;
  auto* sweep_budget = app.add_subcommand(
      "sweep-budget", "Coverage and marginal gain across facility budgets");
  sweep_budget->add_option("instance", budget_args.instance_path, "Instance JSON file")
      ->required();
  sweep_budget->add_option("--budgets", budget_args.budgets, "Ascending budgets")
      ->required()
      ->delimiter(',');
  add_solver_flags(sweep_budget, budget_args.solver, budget_args.config,
                   budget_args.use_preprocess);
  sweep_budget->add_option("--format", budget_args.format, "csv or json")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_budget->add_option("-o,--output", budget_args.output, "Report file (default stdout)");
  sweep_budget->add_option("--manifest", budget_args.manifest, "Manifest path");

  CompareArgs compare_args;
  auto* compare = app.add_subcommand(
      "compare", "DP vs greedy coverage on instance files or a generated batch; "
                 "size classes: small n<=20, medium n<=50, large beyond");
  compare->add_option("--instances", compare_args.instance_paths, "Instance files")
      ->delimiter(',');
  compare->add_option("--count", compare_args.count, "Generated batch size");
  compare->add_option("--seed", compare_args.seed, "Batch seed");
  compare->add_option("--n-min", compare_args.n_min, "Min demand points")->default_val(10);
  compare->add_option("--n-max", compare_args.n_max, "Max demand points")->default_val(15);
  compare->add_option("--m-min", compare_args.m_min, "Min sites")->default_val(5);
  compare->add_option("--m-max", compare_args.m_max, "Max sites")->default_val(10);
  compare->add_option("--radius-min", compare_args.radius_min, "Min radius")
      ->default_val(10.0);
  compare->add_option("--radius-max", compare_args.radius_max, "Max radius")
      ->default_val(30.0);
  compare->add_option("--budget-fraction", compare_args.budget_fraction,
                      "Budget fraction for generated instances")
      ->default_val(0.3);
  compare->add_option("--distribution", compare_args.distribution,
                      "uniform, clustered or mixed")
      ->default_val("mixed")
      ->check(CLI::IsMember({"uniform", "clustered", "mixed"}));
  compare->add_option("--area", compare_args.area, "Square side length")->default_val(100.0);
  {
    static std::string unused_solver;  // compare always runs dp and greedy
    add_solver_flags(compare, unused_solver, compare_args.config,
                     compare_args.use_preprocess);
    compare->get_option("--solver")->group("");  // hidden; not applicable
  }
  compare->add_option("--format", compare_args.format, "csv or json")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  compare->add_option("-o,--output", compare_args.output, "Report file (default stdout)");
  compare->add_option("--manifest", compare_args.manifest, "Manifest path");

  std::string validate_instance, validate_solution_path;
  auto* validate = app.add_subcommand(
      "validate", "Check a solution file against its instance; exit 0 iff clean");
  validate->add_option("instance", validate_instance, "Instance JSON file")->required();
  validate->add_option("solution", validate_solution_path, "Solution JSON file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return run_generate(gen_args);
    if (solve_cmd->parsed()) return run_solve(solve_args);
    if (sweep_radius->parsed()) return run_sweep(radius_args, /*radius_mode=*/true);
    if (sweep_budget->parsed()) return run_sweep(budget_args, /*radius_mode=*/false);
    if (compare->parsed()) return run_compare(compare_args);
    if (validate->parsed()) return run_validate(validate_instance, validate_solution_path);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
