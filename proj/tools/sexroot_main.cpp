// sexroot: run the built-in reconstructions, solve ad-hoc cubics, compare costs.
//
// Exit status: 0 on success, 1 when a hard expectation fails, 2 on usage or
// validation errors.

#include "sexroot/lab.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace sexroot;
using namespace sexroot::lab;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

// Runs each scenario, prints its report and writes artifacts when `out_dir`
// is set. Returns false if any hard expectation failed.
bool run_all(const std::vector<Scenario>& scenarios, const std::string& out_dir,
             const std::string& fmt) {
  bool ok = true;
  nlohmann::json reports = nlohmann::json::array();
  if (!out_dir.empty()) fs::create_directories(out_dir);
  for (const auto& s : scenarios) {
    Report r = run_scenario(s);
    ok = ok && r.passed();
    if (fmt == "json") {
      reports.push_back(render_json(r));
    } else {
      std::cout << render_text(r) << '\n';
    }
    if (!out_dir.empty()) {
      const fs::path dir(out_dir);
      write_file(dir / (s.name + ".trace.csv"), r.trace_csv);
      if (!r.samples_csv.empty()) write_file(dir / (s.name + ".samples.csv"), r.samples_csv);
      write_file(dir / (s.name + ".report.txt"), render_text(r));
      write_file(dir / (s.name + ".report.json"), render_json(r).dump(2) + "\n");
    }
  }
  if (fmt == "json") std::cout << reports.dump(2) << '\n';
  return ok;
}

struct SolveOptions {
  std::string poly;
  std::string method = "dbd";
  std::string strategy = "viete";
  std::string search = "bound";
  int radix = kDefaultRadix;
  int places = 6;
  std::string int_part = "1";
  int first_place = 1;
  std::string a = "1";
  std::string b = "2";
  int iters = 20;
  std::string seed = "1";
  std::string divisor;
  std::string format = "text";
};

Scenario solve_scenario(const SolveOptions& o) {
  nlohmann::json j;
  j["name"] = "solve";
  j["radix"] = o.radix;
  nlohmann::json coeffs = nlohmann::json::array();
  const Poly poly = parse_poly(o.poly);
  for (const auto& c : poly.coeffs()) coeffs.push_back(to_string(c));
  j["polynomial"] = coeffs;
  nlohmann::json params;
  if (o.method == "dbd") {
    j["method"] = "digit_by_digit";
    params = {{"start", o.int_part}, {"first_place", o.first_place}, {"places", o.places},
              {"strategy", o.strategy}, {"search", o.search}};
  } else if (o.method == "newton") {
    j["method"] = "newton";
    if (!o.divisor.empty()) {
      params = {{"variant", "vetter"}, {"seed", o.seed}, {"max_iters", o.iters},
                {"divisor", o.divisor}, {"report_places", o.places}};
    } else {
      nlohmann::json schedule = nlohmann::json::array();
      for (int i = 0; i < o.iters; ++i) schedule.push_back({{"iterate_places", o.places}});
      params = {{"seed", o.seed}, {"schedule", schedule}, {"report_places", o.places}};
    }
  } else if (o.method == "regula-falsi") {
    j["method"] = "regula_falsi";
    params = {{"a", o.a}, {"b", o.b}, {"places", o.places}, {"iterations", o.iters}};
  } else if (o.method == "secant") {
    j["method"] = "secant_glushkov";
    params = {{"x_prev", o.a}, {"x_curr", o.b}, {"max_iters", o.iters},
              {"report_places", o.places}};
  } else {
    throw ScenarioError("--method must be dbd, newton, regula-falsi or secant");
  }
  j["params"] = params;
  return scenario_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positional-arithmetic root finding for cubics"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list", "List the built-in scenarios");

  auto* show_cmd = app.add_subcommand("show", "Print a built-in scenario as JSON");
  std::string show_name;
  show_cmd->add_option("name", show_name, "Scenario name")->required();

  auto* run_cmd = app.add_subcommand("run", "Run scenarios and check their expected values");
  std::vector<std::string> run_names;
  std::vector<std::string> configs;
  bool run_every = false;
  std::string out_dir;
  std::string run_format = "text";
  run_cmd->add_option("names", run_names, "Built-in scenario names");
  run_cmd->add_flag("--all", run_every, "Run every built-in scenario");
  run_cmd->add_option("--config", configs, "Scenario JSON file")->check(CLI::ExistingFile);
  run_cmd->add_option("--out", out_dir, "Directory for traces and reports");
  run_cmd->add_option("--format", run_format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* solve_cmd = app.add_subcommand("solve", "Solve a polynomial given on the command line");
  SolveOptions so;
  solve_cmd->add_option("--poly", so.poly, "Coefficients, constant first, e.g. [-20,10,2,1]")
      ->required();
  solve_cmd->add_option("--method", so.method, "dbd, newton, regula-falsi or secant")
      ->check(CLI::IsMember({"dbd", "newton", "regula-falsi", "secant"}));
  solve_cmd->add_option("--strategy", so.strategy, "horner-holdred, viete, wallis, constant:<c>");
  solve_cmd->add_option("--search", so.search, "bound or ascending")
      ->check(CLI::IsMember({"bound", "ascending"}));
  solve_cmd->add_option("--radix", so.radix, "Radix")->check(CLI::Range(2, 1000));
  solve_cmd->add_option("--places", so.places, "Fractional places")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--int-part", so.int_part, "Known integer part (dbd start value)");
  solve_cmd->add_option("--first-place", so.first_place, "First place to extract (dbd)");
  solve_cmd->add_option("--a", so.a, "Left end point / first iterate");
  solve_cmd->add_option("--b", so.b, "Right end point / second iterate");
  solve_cmd->add_option("--iters", so.iters, "Iterations")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", so.seed, "Newton start value");
  solve_cmd->add_option("--divisor", so.divisor, "Constant Newton divisor");
  solve_cmd->add_option("--format", so.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* costs_cmd = app.add_subcommand("costs", "Compare the effort of each method");
  std::vector<std::string> cost_methods;
  std::string costs_format = "text";
  costs_cmd->add_option("--method", cost_methods, "Restrict to these rows");
  costs_cmd->add_option("--format", costs_format, "Table format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& s : builtin_scenarios()) {
        std::cout << s.name << "  " << to_string(s.method) << '\n';
      }
      return 0;
    }
    if (show_cmd->parsed()) {
      auto s = find_builtin(show_name);
      if (!s) throw ScenarioError("no built-in scenario named '" + show_name + "'");
      std::cout << to_json(*s).dump(2) << '\n';
      return 0;
    }
    if (run_cmd->parsed()) {
      std::vector<Scenario> scenarios;
      if (run_every) scenarios = builtin_scenarios();
      for (const auto& name : run_names) {
        auto s = find_builtin(name);
        if (!s) throw ScenarioError("no built-in scenario named '" + name + "'");
        scenarios.push_back(*s);
      }
      for (const auto& path : configs) scenarios.push_back(load_scenario_file(path));
      if (scenarios.empty()) throw ScenarioError("run needs scenario names, --all or --config");
      return run_all(scenarios, out_dir, run_format) ? 0 : kExitMismatch;
    }
    if (solve_cmd->parsed()) {
      Report r = run_scenario(solve_scenario(so));
      if (so.format == "json") {
        std::cout << render_json(r).dump(2) << '\n';
      } else {
        std::cout << render_text(r);
      }
      return 0;
    }
    if (costs_cmd->parsed()) {
      auto rows = compare_costs(cost_methods);
      if (costs_format == "json") {
        std::cout << costs_to_json(rows).dump(2) << '\n';
      } else {
        std::cout << render_costs(rows);
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
