#include "sexroot/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace sexroot::lab {

using nlohmann::json;
using sexroot::to_string;

std::string to_string(Method m) {
  switch (m) {
    case Method::DigitByDigit: return "digit_by_digit";
    case Method::DigitBound: return "digit_bound";
    case Method::Newton: return "newton";
    case Method::RegulaFalsi: return "regula_falsi";
    case Method::SecantGlushkov: return "secant_glushkov";
    case Method::Geometry: return "geometry";
    case Method::Cardano: return "cardano";
  }
  return "digit_by_digit";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::DigitByDigit, Method::DigitBound, Method::Newton, Method::RegulaFalsi,
                   Method::SecantGlushkov, Method::Geometry, Method::Cardano}) {
    if (to_string(m) == text) return m;
  }
  throw ScenarioError("unknown method '" + std::string(text) + "'");
}

std::string to_string(ExpectKind k) {
  switch (k) {
    case ExpectKind::Hard: return "hard";
    case ExpectKind::Info: return "info";
    case ExpectKind::Refute: return "refute";
  }
  return "hard";
}

namespace {

ExpectKind parse_expect_kind(const std::string& text, const std::string& where) {
  if (text == "hard") return ExpectKind::Hard;
  if (text == "info") return ExpectKind::Info;
  if (text == "refute") return ExpectKind::Refute;
  throw ScenarioError(where + ": kind must be hard, info or refute");
}

// Typed access to one JSON object with field-level error messages.
class Fields {
 public:
  Fields(const json& obj, std::string where, std::set<std::string> allowed)
      : obj_(obj), where_(std::move(where)) {
    if (!obj_.is_object()) fail("", "expected an object");
    for (const auto& [key, value] : obj_.items()) {
      if (!allowed.contains(key)) fail(key, "unknown field");
    }
  }

  bool has(const std::string& key) const { return obj_.contains(key) && !obj_[key].is_null(); }

  const json& raw(const std::string& key) const {
    if (!has(key)) fail(key, "missing required field");
    return obj_[key];
  }

  int integer(const std::string& key) const {
    const json& v = raw(key);
    if (!v.is_number_integer()) fail(key, "expected an integer");
    return v.get<int>();
  }
  int integer(const std::string& key, int fallback) const {
    return has(key) ? integer(key) : fallback;
  }
  std::optional<int> optional_integer(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return integer(key);
  }

  std::string string(const std::string& key) const {
    const json& v = raw(key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }
  std::string string(const std::string& key, const std::string& fallback) const {
    return has(key) ? string(key) : fallback;
  }

  BigRational rational_value(const std::string& key) const {
    const json& v = raw(key);
    try {
      if (v.is_number_integer()) return BigRational(v.get<long long>());
      if (v.is_string()) return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      fail(key, e.what());
    }
    fail(key, "expected an integer or a fraction string");
  }

  SexNum number(const std::string& key, int radix) const {
    const json& v = raw(key);
    std::string text;
    if (v.is_number_integer()) {
      text = std::to_string(v.get<long long>());
    } else if (v.is_string()) {
      text = v.get<std::string>();
    } else {
      fail(key, "expected a positional number string such as \"1;22,7\"");
    }
    try {
      return parse_sexnum(text, radix);
    } catch (const Error& e) {
      fail(key, e.what());
    }
  }

  std::vector<int> int_list(const std::string& key) const {
    std::vector<int> out;
    if (!has(key)) return out;
    const json& v = raw(key);
    if (!v.is_array()) fail(key, "expected a list of integers");
    for (const auto& item : v) {
      if (!item.is_number_integer()) fail(key, "expected a list of integers");
      out.push_back(item.get<int>());
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ScenarioError(where_ + (key.empty() ? "" : "." + key) + ": " + what);
  }

 private:
  const json& obj_;
  std::string where_;
};

void require(bool ok, const Fields& f, const std::string& key, const std::string& what) {
  if (!ok) f.fail(key, what);
}

Poly parse_polynomial_field(const json& j, const std::string& where) {
  if (!j.is_array()) throw ScenarioError(where + ": expected a coefficient list");
  std::vector<BigRational> coeffs;
  for (const auto& c : j) {
    try {
      if (c.is_number_integer()) {
        coeffs.push_back(BigRational(c.get<long long>()));
      } else if (c.is_string()) {
        coeffs.push_back(parse_rational(c.get<std::string>()));
      } else {
        throw ScenarioError(where + ": coefficients must be integers or fraction strings");
      }
    } catch (const ParseError& e) {
      throw ScenarioError(where + ": " + e.what());
    }
  }
  return Poly(std::move(coeffs));
}

json polynomial_to_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) {
    if (den_of(c) == 1 && abs_of(c) < BigRational(1'000'000'000'000LL)) {
      out.push_back(num_of(c).convert_to<long long>());
    } else {
      out.push_back(to_string(c));
    }
  }
  return out;
}

std::vector<NrScheduleEntry> parse_schedule(const json& j, const std::string& where, int radix) {
  if (j.is_string()) {
    if (j.get<std::string>() == "gram") return gram_schedule();
    throw ScenarioError(where + ": the only named schedule is \"gram\"");
  }
  if (!j.is_array() || j.empty()) {
    throw ScenarioError(where + ": expected \"gram\" or a non-empty list of entries");
  }
  std::vector<NrScheduleEntry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    Fields f(j[i], where + "[" + std::to_string(i) + "]",
             {"correction_places", "rounding", "derivative_override", "iterate_places"});
    NrScheduleEntry e;
    e.correction_places = f.optional_integer("correction_places");
    try {
      e.correction_rounding = parse_rounding_mode(f.string("rounding", "truncate"));
    } catch (const ParseError& err) {
      f.fail("rounding", err.what());
    }
    if (f.has("derivative_override")) e.derivative_override = f.number("derivative_override", radix);
    e.iterate_places = f.integer("iterate_places");
    require(e.iterate_places >= 0, f, "iterate_places", "must be >= 0");
    require(!e.correction_places || *e.correction_places >= 0, f, "correction_places",
            "must be >= 0");
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

MethodParams parse_params(const Scenario& s) {
  const std::string where = "scenario '" + s.name + "': params";
  const int radix = s.radix;
  switch (s.method) {
    case Method::DigitByDigit: {
      Fields f(s.params, where,
               {"start", "first_place", "places", "strategy", "search", "round_places"});
      DigitByDigitParams p;
      p.start = f.number("start", radix);
      p.first_place = f.integer("first_place", 1);
      p.places = f.integer("places");
      require(p.places >= p.first_place - 1, f, "places", "must be >= first_place - 1");
      try {
        p.strategy = parse_divisor_strategy(f.string("strategy", "viete"));
      } catch (const Error& e) {
        f.fail("strategy", e.what());
      }
      std::string search = f.string("search", "bound");
      require(search == "bound" || search == "ascending", f, "search",
              "must be \"bound\" or \"ascending\"");
      p.search = search == "bound" ? DigitSearch::BoundThenVerify : DigitSearch::Ascending;
      p.round_places = f.int_list("round_places");
      return p;
    }
    case Method::DigitBound: {
      Fields f(s.params, where,
               {"x", "place", "numerator_places", "denominator_places", "strategy", "trials"});
      DigitBoundParams p;
      p.x = f.number("x", radix);
      p.place = f.integer("place");
      p.numerator_places = f.optional_integer("numerator_places");
      p.denominator_places = f.optional_integer("denominator_places");
      if (f.has("strategy")) {
        try {
          p.strategy = parse_divisor_strategy(f.string("strategy"));
        } catch (const Error& e) {
          f.fail("strategy", e.what());
        }
      }
      p.trials = f.int_list("trials");
      for (int t : p.trials) require(t >= 0 && t < radix, f, "trials", "digits must be < radix");
      return p;
    }
    case Method::Newton: {
      Fields f(s.params, where,
               {"variant", "seed", "schedule", "max_iters", "divisor", "offset", "report_places"});
      NewtonParams p;
      std::string variant = f.string("variant", "schedule");
      require(variant == "schedule" || variant == "vetter", f, "variant",
              "must be \"schedule\" or \"vetter\"");
      p.variant = variant == "schedule" ? NewtonParams::Variant::Schedule
                                        : NewtonParams::Variant::Vetter;
      p.seed = f.number("seed", radix);
      if (p.variant == NewtonParams::Variant::Schedule) {
        p.schedule = parse_schedule(f.raw("schedule"), where + ".schedule", radix);
      } else {
        p.max_iters = f.integer("max_iters");
        require(p.max_iters >= 1, f, "max_iters", "must be >= 1");
        if (f.has("divisor")) p.divisor = f.rational_value("divisor");
        require(p.divisor > 0, f, "divisor", "must be positive");
      }
      if (f.has("offset")) p.offset = f.number("offset", radix);
      p.report_places = f.integer("report_places", 6);
      return p;
    }
    case Method::RegulaFalsi: {
      Fields f(s.params, where, {"a", "b", "places", "iterations"});
      RegulaFalsiParams p;
      p.a = f.number("a", radix);
      p.b = f.number("b", radix);
      p.places = f.integer("places");
      p.iterations = f.integer("iterations");
      require(p.places >= 0, f, "places", "must be >= 0");
      require(p.iterations >= 1, f, "iterations", "must be >= 1");
      return p;
    }
    case Method::SecantGlushkov: {
      Fields f(s.params, where,
               {"x_prev", "x_curr", "max_iters", "initial_places", "max_places", "report_places"});
      SecantParams p;
      p.x_prev = f.number("x_prev", radix);
      p.x_curr = f.number("x_curr", radix);
      p.max_iters = f.integer("max_iters");
      p.initial_places = f.integer("initial_places", 1);
      p.max_places = f.integer("max_places", 40);
      p.report_places = f.integer("report_places", 6);
      require(p.max_iters >= 1, f, "max_iters", "must be >= 1");
      require(p.initial_places >= 0, f, "initial_places", "must be >= 0");
      require(p.max_places >= p.initial_places, f, "max_places", "must be >= initial_places");
      return p;
    }
    case Method::Geometry: {
      Fields f(s.params, where, {"construction", "a", "b_sq", "c", "places", "samples"});
      GeometryParams p;
      ConicKind kind;
      try {
        kind = parse_conic_kind(f.string("construction"));
      } catch (const ParseError& e) {
        f.fail("construction", e.what());
      }
      BigRational a = f.has("a") ? f.rational_value("a") : BigRational(0);
      try {
        p.construction =
            ConicConstruction::make(kind, a, f.rational_value("b_sq"), f.rational_value("c"));
      } catch (const DomainError& e) {
        f.fail("b_sq", e.what());
      }
      p.places = f.integer("places", 6);
      require(p.places >= 0 && p.places <= 12, f, "places", "must be within 0..12");
      p.samples = f.integer("samples", 0);
      require(p.samples == 0 || p.samples >= 2, f, "samples", "must be 0 or >= 2");
      return p;
    }
    case Method::Cardano: {
      Fields f(s.params, where, {"places", "decimal_of"});
      CardanoParams p;
      p.places = f.integer("places");
      require(p.places >= 0 && p.places <= 40, f, "places", "must be within 0..40");
      if (f.has("decimal_of")) p.decimal_of = f.number("decimal_of", radix);
      return p;
    }
  }
  throw ScenarioError(where + ": unhandled method");
}

Scenario scenario_from_json(const json& j) {
  std::string name = j.is_object() && j.contains("name") && j["name"].is_string()
                         ? j["name"].get<std::string>()
                         : std::string("?");
  const std::string where = "scenario '" + name + "'";
  Fields f(j, where,
           {"name", "description", "polynomial", "method", "radix", "params", "expected"});
  Scenario s;
  s.name = f.string("name");
  require(!s.name.empty(), f, "name", "must not be empty");
  s.description = f.string("description", "");
  s.polynomial = parse_polynomial_field(f.raw("polynomial"), where + ".polynomial");
  require(!s.polynomial.is_zero(), f, "polynomial", "must not be the zero polynomial");
  try {
    s.method = parse_method(f.string("method"));
  } catch (const ScenarioError& e) {
    f.fail("method", e.what());
  }
  s.radix = f.integer("radix", kDefaultRadix);
  require(s.radix >= 2, f, "radix", "must be >= 2");
  s.params = f.has("params") ? f.raw("params") : json::object();

  if (f.has("expected")) {
    const json& list = f.raw("expected");
    if (!list.is_array()) f.fail("expected", "expected a list");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string ewhere = where + ".expected[" + std::to_string(i) + "]";
      Fields e(list[i], ewhere, {"output", "value", "kind", "source", "quote", "note"});
      Expectation x;
      x.output = e.string("output");
      x.value = e.string("value");
      x.kind = parse_expect_kind(e.string("kind", "hard"), ewhere);
      x.source = e.string("source");
      require(x.source == "historical" || x.source == "oracle", e, "source",
              "must be \"historical\" or \"oracle\"");
      x.quote = e.string("quote", "");
      require(x.source != "historical" || !x.quote.empty(), e, "quote",
              "historical values must carry the published notation");
      x.note = e.string("note", "");
      s.expected.push_back(std::move(x));
    }
  }
  parse_params(s);  // validate now; run_scenario parses again
  return s;
}

json to_json(const Scenario& s) {
  json j;
  j["name"] = s.name;
  if (!s.description.empty()) j["description"] = s.description;
  j["polynomial"] = polynomial_to_json(s.polynomial);
  j["method"] = to_string(s.method);
  j["radix"] = s.radix;
  j["params"] = s.params;
  json expected = json::array();
  for (const auto& e : s.expected) {
    json x{{"output", e.output}, {"value", e.value}, {"kind", to_string(e.kind)},
           {"source", e.source}};
    if (!e.quote.empty()) x["quote"] = e.quote;
    if (!e.note.empty()) x["note"] = e.note;
    expected.push_back(std::move(x));
  }
  j["expected"] = std::move(expected);
  return j;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ScenarioError(path.string() + ": " + e.what());
  }
  return scenario_from_json(j);
}

std::vector<Scenario> builtin_scenarios() {
  std::vector<Scenario> out;
  for (const auto& [stem, text] : builtin_scenario_sources()) {
    try {
      out.push_back(scenario_from_json(json::parse(text)));
    } catch (const json::parse_error& e) {
      throw ScenarioError("built-in scenario " + stem + ": " + e.what());
    }
  }
  return out;
}

std::optional<Scenario> find_builtin(std::string_view name) {
  for (auto& s : builtin_scenarios()) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

std::vector<std::string> list_scenarios() {
  std::vector<std::string> names;
  for (const auto& s : builtin_scenarios()) names.push_back(s.name);
  return names;
}

}  // namespace sexroot::lab
