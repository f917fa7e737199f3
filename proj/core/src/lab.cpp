#include "sexroot/lab.hpp"

#include "sexroot/error.hpp"
#include "sexroot/secant_solver.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace sexroot::lab {

using nlohmann::json;
using sexroot::to_string;

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Match: return "MATCH";
    case VerdictStatus::Mismatch: return "MISMATCH";
    case VerdictStatus::Info: return "INFO";
  }
  return "INFO";
}

bool Verdict::ok() const {
  switch (kind) {
    case ExpectKind::Hard: return matched;
    case ExpectKind::Refute: return !matched;
    case ExpectKind::Info: return true;
  }
  return false;
}

bool Report::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.ok(); });
}

const Output* Report::find(std::string_view key) const {
  for (const auto& o : outputs) {
    if (o.key == key) return &o;
  }
  return nullptr;
}

std::string place_name(int place) {
  return place == 0 ? "integer part" : to_roman(place);
}

int first_difference(const SexNum& expected, const SexNum& computed) {
  if (to_rational(expected) == to_rational(computed)) return -1;
  if (expected.sign() != computed.sign() || expected.integer_part() != computed.integer_part()) {
    return 0;
  }
  const auto& a = expected.frac_digits();
  const auto& b = computed.frac_digits();
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int da = i < a.size() ? a[i] : 0;
    int db = i < b.size() ? b[i] : 0;
    if (da != db) return static_cast<int>(i) + 1;
  }
  return -1;
}

namespace {

const auto kTrunc = RoundingMode::TruncateTowardZero;

class Outputs {
 public:
  void text(std::string key, std::string value) {
    out_.push_back({std::move(key), std::move(value), false});
  }
  void number(std::string key, const SexNum& value) {
    out_.push_back({std::move(key), format(value), true});
  }
  void integer(std::string key, long long value) { text(std::move(key), std::to_string(value)); }
  void flag(std::string key, bool value) { text(std::move(key), value ? "true" : "false"); }
  std::vector<Output> take() { return std::move(out_); }

 private:
  std::vector<Output> out_;
};

SexNum on_grid(const BigRational& x, int places, int radix) {
  return from_rational(x, std::max(places, 0), kTrunc, radix);
}

std::string key(const std::string& prefix, std::size_t index) {
  return prefix + std::to_string(index);
}

void run_dbd(const Scenario& s, const DigitByDigitParams& p, Outputs& out, Report& report) {
  DigitRun run = run_digit_by_digit(s.polynomial, p.start, p.places, p.strategy, s.radix,
                                    {p.first_place, p.search});
  out.number("root", run.root);
  for (std::size_t i = 0; i < run.steps.size(); ++i) {
    const auto& st = run.steps[i];
    const std::string pre = "step" + std::to_string(i + 1) + ".";
    out.integer(pre + "place", st.place);
    out.number(pre + "x_before", on_grid(st.x_before, st.place - 1, s.radix));
    out.text(pre + "residual", to_string(st.residual));
    out.text(pre + "divisor", to_string(st.divisor));
    out.text(pre + "hhat", st.divisor == 0 ? "unbounded" : to_significant(st.hhat(), 3));
    out.integer(pre + "bound", st.bound_digit);
    out.integer(pre + "digit", st.chosen_digit);
    out.integer(pre + "tests", st.tests_performed);
  }
  out.integer("total_tests", run.total_tests());
  for (int n : p.round_places) {
    out.number("truncated_" + std::to_string(n), round_to(run.root, n, kTrunc));
    out.number("rounded_away_" + std::to_string(n),
               round_to(run.root, n, RoundingMode::AwayFromZero));
    out.number("rounded_nearest_" + std::to_string(n),
               round_to(run.root, n, RoundingMode::NearestHalfAwayFromZero));
  }
  report.trace_csv = to_csv(run.steps);
}

void run_bound(const Scenario& s, const DigitBoundParams& p, Outputs& out, Report& report) {
  const BigRational x = to_rational(p.x);
  const Poly& poly = s.polynomial;
  if (eval(poly, x) > 0) throw DomainError("p(x) must be <= 0 at the bound point");

  if (p.strategy) {
    out.integer("bound", digit_bound(poly, x, p.place, *p.strategy, s.radix));
    out.flag("sound", bound_is_sound(*p.strategy, poly, x));
  } else {
    out.integer("bound", rounded_digit_bound(poly, x, p.place, p.numerator_places,
                                             p.denominator_places, s.radix));
  }
  out.integer("exact_bound",
              rounded_digit_bound(poly, x, p.place, std::nullopt, std::nullopt, s.radix));

  const BigRational residual = -eval(poly, x);
  const BigRational slope = eval(derivative(poly), x);
  if (p.numerator_places) {
    out.number("numerator",
               from_rational(residual, *p.numerator_places, RoundingMode::AwayFromZero, s.radix));
  }
  if (p.denominator_places) {
    out.number("denominator", from_rational(slope, *p.denominator_places, kTrunc, s.radix));
  }

  std::ostringstream csv;
  csv << "digit,value,scientific\n";
  for (int t : p.trials) {
    BigRational v = trial_value(poly, x, t, p.place, s.radix);
    out.text("trial_" + std::to_string(t), to_scientific(v, 7));
    csv << t << ',' << to_string(v) << ',' << to_scientific(v, 7) << '\n';
  }
  report.trace_csv = csv.str();
}

// First iteration from which the iterate truncated to `places` no longer
// changes, or 0 if the trace never settles.
int settled_at(const NrTrace& trace, int places) {
  if (trace.empty()) return 0;
  auto cut = [places](const SexNum& v) {
    return to_rational(on_grid(to_rational(v), places, v.radix()));
  };
  const BigRational last = cut(trace.back().iterate);
  int first = static_cast<int>(trace.size());
  for (int i = static_cast<int>(trace.size()) - 1; i >= 0; --i) {
    const auto& it = trace[static_cast<std::size_t>(i)].iterate;
    if (it.frac_places() < places || cut(it) != last) break;
    first = i + 1;
  }
  return first;
}

void run_newton(const Scenario& s, const NewtonParams& p, Outputs& out, Report& report) {
  NrTrace trace = p.variant == NewtonParams::Variant::Schedule
                      ? run_schedule(s.polynomial, p.seed, p.schedule)
                      : run_vetter(s.polynomial, p.max_iters, {p.seed, p.divisor});
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out.number(key("x", i + 1), trace[i].iterate);
    out.number(key("correction", i + 1), trace[i].applied_correction);
  }
  const SexNum& result = trace.back().iterate;
  out.number("result", result);
  out.integer("iterations", static_cast<long long>(trace.size()));
  out.integer("settled_at", settled_at(trace, p.report_places));
  SexNum final_value = result;
  if (p.offset) {
    const int places = std::max(result.frac_places(), p.offset->frac_places());
    final_value = from_rational(to_rational(result) + to_rational(*p.offset), places, kTrunc,
                                s.radix);
    out.number("shifted", final_value);
  }
  out.number("result_" + std::to_string(p.report_places),
             round_to(final_value, p.report_places, kTrunc));
  const auto& frac = final_value.frac_digits();
  const auto next = static_cast<std::size_t>(p.report_places);
  if (frac.size() > next) {
    out.integer("place_" + std::to_string(p.report_places + 1), frac[next]);
  }
  report.trace_csv = to_csv(trace);
}

void run_regula(const Scenario& s, const RegulaFalsiParams& p, Outputs& out, Report& report) {
  SecantRun run = regula_falsi_fixed(s.polynomial, p.a, p.b, p.places, p.iterations);
  for (const auto& row : run.rows) out.number(key("x", row.iteration), row.new_iterate);
  out.number("result", run.result);
  out.integer("stabilized_at", run.stabilization_iteration(p.places));
  out.number("root", truncated_root(s.polynomial, to_rational(p.a), to_rational(p.b), p.places,
                                    s.radix));
  // One real root in [a, b] with p(a) < 0: x <= root exactly when p(x) <= 0.
  bool below = std::all_of(run.rows.begin(), run.rows.end(),
                           [](const SecantRow& r) { return r.residual_sign <= 0; });
  out.flag("all_below_root", below);
  out.integer("poly_evals", run.poly_evals);
  out.integer("rounded_ops", run.rounded_ops);
  report.trace_csv = to_csv(run.rows);
}

void run_secant(const Scenario& s, const SecantParams& p, Outputs& out, Report& report) {
  SecantRun run = secant_glushkov(s.polynomial, p.x_prev, p.x_curr, p.max_iters,
                                  {p.initial_places, p.max_places});
  for (const auto& row : run.rows) out.number(key("x", row.iteration), row.new_iterate);
  out.number("result", run.result);
  out.number("result_" + std::to_string(p.report_places),
             round_to(run.result, p.report_places, kTrunc));
  out.integer("reached_" + std::to_string(p.report_places) + "_at",
              run.stabilization_iteration(p.report_places));
  out.integer("poly_evals", run.poly_evals);
  report.trace_csv = to_csv(run.rows);
}

void run_geometry(const Scenario& s, const GeometryParams& p, Outputs& out, Report& report) {
  const auto& cons = p.construction;
  out.text("construction", to_string(cons.kind));
  out.flag("identity", verify_identity(cons, s.polynomial));
  out.number("abscissa_1", intersect_abscissa(cons, 1, s.radix));
  out.number("abscissa", intersect_abscissa(cons, p.places, s.radix));
  Poly cubic = reduced_cubic(cons);
  out.text("reduced_cubic", to_string(cubic));
  out.flag("matches_polynomial", cubic == s.polynomial);
  out.flag("matches_depressed", cubic == depress(cubics::fibonacci()).poly);
  if (p.samples > 0) report.samples_csv = to_csv(sample_curves(cons, p.samples));
  report.trace_csv = "lhs,rhs\n\"" + to_string(identity_lhs(cons)) + "\",\"" +
                     to_string(identity_rhs(cons, s.polynomial)) + "\"\n";
}

void run_cardano(const Scenario& s, const CardanoParams& p, Outputs& out, Report& report) {
  if (!(s.polynomial == cubics::fibonacci())) {
    throw DomainError("the Cardano reference is defined for x^3 + 2x^2 + 10x - 20 only");
  }
  SexNum root = cardano_reference(p.places, s.radix);
  Interval enc = cardano_interval(p.places, s.radix);
  SexNum bisection = truncated_root(s.polynomial, 1, 2, p.places, s.radix);
  out.number("root", root);
  out.number("bisection", bisection);
  out.flag("agree", root == bisection);
  if (p.decimal_of) out.text("decimal_of", to_decimal(to_rational(*p.decimal_of), 17));
  report.trace_csv = "lo,hi,width\n" + to_string(enc.lo) + ',' + to_string(enc.hi) + ',' +
                     to_string(enc.width()) + '\n';
}

Verdict judge(const Expectation& e, const Report& r) {
  Verdict v;
  v.output = e.output;
  v.expected = e.value;
  v.kind = e.kind;
  v.source = e.source;
  v.quote = e.quote;
  v.note = e.note;
  const Output* o = r.find(e.output);
  if (!o) {
    v.matched = false;
    v.place = -1;
  } else {
    v.computed = o->value;
    if (o->positional) {
      try {
        int diff = first_difference(parse_sexnum(e.value, r.radix), parse_sexnum(o->value, r.radix));
        v.matched = diff < 0;
        v.place = diff;
      } catch (const ParseError&) {
        v.matched = false;
      }
    } else {
      v.matched = e.value == o->value;
    }
  }
  if (e.kind == ExpectKind::Info) {
    v.status = VerdictStatus::Info;
  } else {
    v.status = v.matched ? VerdictStatus::Match : VerdictStatus::Mismatch;
  }
  return v;
}

}  // namespace

Report run_scenario(const Scenario& s) {
  MethodParams params = parse_params(s);
  Report report;
  report.scenario = s.name;
  report.method = to_string(s.method);
  report.radix = s.radix;
  Outputs out;
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, DigitByDigitParams>) run_dbd(s, p, out, report);
        else if constexpr (std::is_same_v<P, DigitBoundParams>) run_bound(s, p, out, report);
        else if constexpr (std::is_same_v<P, NewtonParams>) run_newton(s, p, out, report);
        else if constexpr (std::is_same_v<P, RegulaFalsiParams>) run_regula(s, p, out, report);
        else if constexpr (std::is_same_v<P, SecantParams>) run_secant(s, p, out, report);
        else if constexpr (std::is_same_v<P, GeometryParams>) run_geometry(s, p, out, report);
        else run_cardano(s, p, out, report);
      },
      params);
  report.outputs = out.take();
  for (const auto& e : s.expected) report.verdicts.push_back(judge(e, report));
  return report;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "scenario " << r.scenario << " (" << r.method << ", radix " << r.radix << ")\n";
  std::size_t width = 0;
  for (const auto& o : r.outputs) width = std::max(width, o.key.size());
  for (const auto& o : r.outputs) {
    os << "  " << o.key << std::string(width - o.key.size(), ' ') << "  " << o.value << '\n';
  }
  if (!r.verdicts.empty()) os << "checks:\n";
  for (const auto& v : r.verdicts) {
    std::string status = to_string(v.status);
    os << "  " << status << std::string(9 - status.size(), ' ') << v.output << ": expected "
       << v.expected << ", computed " << (v.computed.empty() ? "(none)" : v.computed);
    if (v.status != VerdictStatus::Info && v.place >= 0) {
      os << ", differs at place " << place_name(v.place);
    }
    if (v.kind == ExpectKind::Refute) os << " [refuted value]";
    if (v.kind == ExpectKind::Info) os << (v.matched ? " [reproduced]" : " [not reproduced]");
    os << " (" << v.source;
    if (!v.quote.empty()) os << ": " << v.quote;
    os << ")\n";
    if (!v.note.empty()) os << "           " << v.note << '\n';
  }
  os << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

json render_json(const Report& r) {
  json outputs = json::object();
  for (const auto& o : r.outputs) outputs[o.key] = o.value;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    json j{{"output", v.output},
           {"expected", v.expected},
           {"computed", v.computed},
           {"kind", to_string(v.kind)},
           {"status", to_string(v.status)},
           {"matched", v.matched},
           {"ok", v.ok()},
           {"source", v.source}};
    if (v.place >= 0) j["place"] = place_name(v.place);
    if (!v.quote.empty()) j["quote"] = v.quote;
    if (!v.note.empty()) j["note"] = v.note;
    verdicts.push_back(std::move(j));
  }
  return {{"scenario", r.scenario}, {"method", r.method}, {"radix", r.radix},
          {"outputs", outputs},     {"verdicts", verdicts}, {"passed", r.passed()}};
}

// ---------------------------------------------------------------------------
// Cost comparison

namespace {

constexpr int kCostPlaces = 6;

SexNum six_place_root() {
  return truncated_root(cubics::fibonacci(), 1, 2, kCostPlaces);
}

SexNum cut6(const SexNum& v) { return on_grid(to_rational(v), kCostPlaces, v.radix()); }

int taylor_terms(const DivisorStrategy& s) {
  switch (s.kind) {
    case DivisorStrategy::Kind::HornerHoldred: return 1;
    case DivisorStrategy::Kind::Viete: return 2;
    case DivisorStrategy::Kind::Wallis: return 3;
    case DivisorStrategy::Kind::Constant: return 0;
  }
  return 0;
}

CostRow dbd_cost(const std::string& name, const DivisorStrategy& strategy, DigitSearch search) {
  DigitRun run = run_digit_by_digit(cubics::fibonacci(), SexNum::from_digits(1, {1}, {}),
                                    kCostPlaces, strategy, kDefaultRadix, {1, search});
  CostRow row;
  row.method = name;
  row.iterations = static_cast<int>(run.steps.size());
  row.poly_evals = run.total_tests() + 1;  // plus the bracket check at the start
  row.deriv_evals = search == DigitSearch::Ascending
                        ? 0
                        : taylor_terms(strategy) * static_cast<int>(run.steps.size());
  row.value = format(run.root);
  row.correct = run.root == six_place_root();
  return row;
}

CostRow gram_cost() {
  const auto schedule = gram_schedule();
  NrTrace trace = run_gram();
  CostRow row;
  row.method = "newton-gram";
  row.iterations = settled_at(trace, kCostPlaces);
  for (std::size_t i = 0; i < trace.size(); ++i) {
    ++row.poly_evals;
    if (!schedule[i].derivative_override) ++row.deriv_evals;
    if (schedule[i].correction_places) ++row.rounded_ops;
    ++row.rounded_ops;  // new iterate truncated
  }
  const SexNum shifted =
      from_rational(to_rational(trace.back().iterate) - rational(2, 3), kCostPlaces,
                    RoundingMode::TruncateTowardZero);
  row.value = format(shifted);
  row.correct = shifted == six_place_root();
  return row;
}

CostRow vetter_cost() {
  NrTrace trace = run_vetter(12);
  CostRow row;
  row.method = "newton-vetter";
  int until = 0;
  const SexNum target = six_place_root();
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (trace[i].iterate.frac_places() >= kCostPlaces && cut6(trace[i].iterate) == target) {
      until = static_cast<int>(i) + 1;
      break;
    }
  }
  if (until == 0) until = static_cast<int>(trace.size());
  row.iterations = until;
  row.poly_evals = until;
  row.rounded_ops = until;
  row.value = format(cut6(trace[static_cast<std::size_t>(until - 1)].iterate));
  row.correct = cut6(trace[static_cast<std::size_t>(until - 1)].iterate) == target;
  return row;
}

CostRow regula_cost() {
  const auto a = SexNum::from_digits(1, {1}, {});
  const auto b = SexNum::from_digits(1, {2}, {});
  const int settled = regula_falsi_fixed(cubics::fibonacci(), a, b, kCostPlaces, 30)
                          .stabilization_iteration(kCostPlaces);
  SecantRun run = regula_falsi_fixed(cubics::fibonacci(), a, b, kCostPlaces, settled);
  CostRow row;
  row.method = "regula-falsi";
  row.iterations = settled;
  row.poly_evals = run.poly_evals;
  row.rounded_ops = run.rounded_ops + 1;  // p(b) truncated once
  row.value = format(cut6(run.result));
  row.correct = cut6(run.result) == six_place_root();
  return row;
}

CostRow glushkov_cost() {
  const auto x0 = SexNum::from_digits(1, {1}, {});
  const auto x1 = SexNum::from_digits(1, {2}, {});
  const int settled =
      secant_glushkov(cubics::fibonacci(), x0, x1, 30).stabilization_iteration(kCostPlaces);
  SecantRun run = secant_glushkov(cubics::fibonacci(), x0, x1, settled);
  CostRow row;
  row.method = "secant-glushkov";
  row.iterations = settled;
  row.poly_evals = run.poly_evals;
  row.rounded_ops = run.rounded_ops;
  row.value = format(cut6(run.result));
  row.correct = cut6(run.result) == six_place_root();
  return row;
}

}  // namespace

std::vector<std::string> cost_method_names() {
  return {"dbd-horner",   "dbd-viete",     "dbd-wallis",   "dbd-ascending",
          "newton-gram",  "newton-vetter", "regula-falsi", "secant-glushkov"};
}

std::vector<CostRow> compare_costs(const std::vector<std::string>& methods) {
  std::vector<std::string> wanted = methods.empty() ? cost_method_names() : methods;
  std::vector<CostRow> rows;
  for (const auto& m : wanted) {
    if (m == "dbd-horner") {
      rows.push_back(dbd_cost(m, DivisorStrategy::horner_holdred(), DigitSearch::BoundThenVerify));
    } else if (m == "dbd-viete") {
      rows.push_back(dbd_cost(m, DivisorStrategy::viete(), DigitSearch::BoundThenVerify));
    } else if (m == "dbd-wallis") {
      rows.push_back(dbd_cost(m, DivisorStrategy::wallis(), DigitSearch::BoundThenVerify));
    } else if (m == "dbd-ascending") {
      rows.push_back(dbd_cost(m, DivisorStrategy::viete(), DigitSearch::Ascending));
    } else if (m == "newton-gram") {
      rows.push_back(gram_cost());
    } else if (m == "newton-vetter") {
      rows.push_back(vetter_cost());
    } else if (m == "regula-falsi") {
      rows.push_back(regula_cost());
    } else if (m == "secant-glushkov") {
      rows.push_back(glushkov_cost());
    } else {
      throw ScenarioError("unknown cost method '" + m + "'");
    }
  }
  return rows;
}

std::string render_costs(const std::vector<CostRow>& rows) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %5s %7s %7s %7s  %-24s %s\n", "method", "iters",
                "p-evals", "d-evals", "rounded", "six places", "correct");
  os << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-16s %5d %7d %7d %7d  %-24s %s\n", r.method.c_str(),
                  r.iterations, r.poly_evals, r.deriv_evals, r.rounded_ops, r.value.c_str(),
                  r.correct ? "yes" : "no");
    os << line;
  }
  return os.str();
}

json costs_to_json(const std::vector<CostRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"method", r.method},
                   {"iterations", r.iterations},
                   {"poly_evals", r.poly_evals},
                   {"deriv_evals", r.deriv_evals},
                   {"rounded_ops", r.rounded_ops},
                   {"value", r.value},
                   {"correct", r.correct}});
  }
  return out;
}

}  // namespace sexroot::lab
