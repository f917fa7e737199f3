#pragma once

// Runs scenarios, checks their expected values and renders reports.

#include "sexroot/scenario.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace sexroot::lab {

struct Output {
  std::string key;
  std::string value;
  bool positional = false;  // value is a radix number and compares digit-wise
};

enum class VerdictStatus { Match, Mismatch, Info };

std::string to_string(VerdictStatus s);

struct Verdict {
  std::string output;
  std::string expected;
  std::string computed;  // empty when the run has no such output
  ExpectKind kind = ExpectKind::Hard;
  VerdictStatus status = VerdictStatus::Info;
  bool matched = false;
  int place = -1;  // first differing place (0 = integer part), -1 if none
  std::string source;
  std::string quote;
  std::string note;

  /// Hard rows must match, refute rows must not; info rows always pass.
  bool ok() const;
};

struct Report {
  std::string scenario;
  std::string method;
  int radix = kDefaultRadix;
  std::vector<Output> outputs;
  std::vector<Verdict> verdicts;
  std::string trace_csv;
  std::string samples_csv;  // geometry only

  bool passed() const;
  const Output* find(std::string_view key) const;
};

/// Throws ScenarioError on invalid parameters and DomainError when the
/// method cannot run on the given polynomial.
Report run_scenario(const Scenario& s);

/// "integer part" for 0, otherwise the Roman numeral of the place.
std::string place_name(int place);

/// Digit-wise comparison; returns -1 when the values are equal, otherwise
/// the first place whose digits differ (0 for sign or integer part).
int first_difference(const SexNum& expected, const SexNum& computed);

std::string render_text(const Report& r);
nlohmann::json render_json(const Report& r);

/// Effort needed by each method to fix six places of the positive root of
/// x^3 + 2x^2 + 10x - 20.
struct CostRow {
  std::string method;
  int iterations = 0;   // iterations (or digit steps) until place VI is final
  int poly_evals = 0;
  int deriv_evals = 0;  // Taylor-coefficient or derivative evaluations
  int rounded_ops = 0;  // operations whose result is rounded to fixed places
  std::string value;    // the six-place value produced
  bool correct = false; // equals the root truncated to six places
};

/// Rows for the named methods, or all of them when `methods` is empty.
/// Names: dbd-horner, dbd-viete, dbd-wallis, dbd-ascending, newton-gram,
/// newton-vetter, regula-falsi, secant-glushkov.
std::vector<CostRow> compare_costs(const std::vector<std::string>& methods = {});
std::vector<std::string> cost_method_names();
std::string render_costs(const std::vector<CostRow>& rows);
nlohmann::json costs_to_json(const std::vector<CostRow>& rows);

}  // namespace sexroot::lab
