#pragma once

// Scenario files: a named polynomial, a method with its parameters, and the
// values the run is expected to produce.
//
//   {
//     "name": "gram-nr",
//     "polynomial": ["-704/27", "26/3", 0, 1],
//     "method": "newton",
//     "radix": 60,
//     "params": { "seed": "2", "schedule": "gram" },
//     "expected": [
//       { "output": "x2", "value": "2;2,8", "kind": "hard",
//         "source": "historical", "quote": "2°2'8''" }
//     ]
//   }
//
// Expectation kinds: "hard" must match; "info" is reported only; "refute"
// must NOT match (a value recorded historically that is known to be wrong).

#include "sexroot/digit_solver.hpp"
#include "sexroot/error.hpp"
#include "sexroot/geometry.hpp"
#include "sexroot/newton_solver.hpp"
#include "sexroot/poly.hpp"
#include "sexroot/sexnum.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sexroot::lab {

/// Validation failure; the message names the offending field.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

enum class Method {
  DigitByDigit,
  DigitBound,
  Newton,
  RegulaFalsi,
  SecantGlushkov,
  Geometry,
  Cardano,
};

std::string to_string(Method m);
Method parse_method(std::string_view text);

enum class ExpectKind { Hard, Info, Refute };

std::string to_string(ExpectKind k);

struct Expectation {
  std::string output;
  std::string value;
  ExpectKind kind = ExpectKind::Hard;
  std::string source;  // "historical" or "oracle"
  std::string quote;   // published notation, for historical values
  std::string note;
};

struct DigitByDigitParams {
  SexNum start;
  int first_place = 1;
  int places = 0;
  DivisorStrategy strategy;
  DigitSearch search = DigitSearch::BoundThenVerify;
  std::vector<int> round_places;  // extra outputs: root rounded to these places
};

struct DigitBoundParams {
  SexNum x;
  int place = 1;
  std::optional<int> numerator_places;
  std::optional<int> denominator_places;
  std::optional<DivisorStrategy> strategy;  // replaces p'(x) when set
  std::vector<int> trials;                  // trial digits to evaluate at `place`
};

struct NewtonParams {
  enum class Variant { Schedule, Vetter };
  Variant variant = Variant::Schedule;
  SexNum seed;
  std::vector<NrScheduleEntry> schedule;
  int max_iters = 0;
  BigRational divisor = 20;
  std::optional<SexNum> offset;  // added to the final iterate ("shifted" output)
  int report_places = 6;
};

struct RegulaFalsiParams {
  SexNum a;
  SexNum b;
  int places = 6;
  int iterations = 14;
};

struct SecantParams {
  SexNum x_prev;
  SexNum x_curr;
  int max_iters = 18;
  int initial_places = 1;
  int max_places = 40;
  int report_places = 6;
};

struct GeometryParams {
  ConicConstruction construction;
  int places = 6;
  int samples = 0;
};

struct CardanoParams {
  int places = 11;
  std::optional<SexNum> decimal_of;  // value whose 17-decimal expansion is reported
};

using MethodParams = std::variant<DigitByDigitParams, DigitBoundParams, NewtonParams,
                                  RegulaFalsiParams, SecantParams, GeometryParams, CardanoParams>;

struct Scenario {
  std::string name;
  std::string description;
  Poly polynomial;
  Method method = Method::DigitByDigit;
  int radix = kDefaultRadix;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Expectation> expected;
};

/// Throws ScenarioError with a field-level message.
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Scenario& s);
Scenario load_scenario_file(const std::filesystem::path& path);

/// Typed, validated method parameters. Throws ScenarioError.
MethodParams parse_params(const Scenario& s);

/// Raw (name, JSON text) pairs compiled in from scenarios/*.json.
const std::vector<std::pair<std::string, std::string>>& builtin_scenario_sources();
std::vector<Scenario> builtin_scenarios();
std::optional<Scenario> find_builtin(std::string_view name);
std::vector<std::string> list_scenarios();

}  // namespace sexroot::lab
