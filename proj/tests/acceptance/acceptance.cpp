// Acceptance checks, one line per criterion:
//   acceptance               run all, exit 1 if any fails
//   acceptance --criterion N run one

#include "sexroot/lab.hpp"
#include "sexroot/secant_solver.hpp"

#include "oracle.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace sexroot;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      if (!failures_.empty()) failures_ += "; ";
      failures_ += what;
    }
  }
  Outcome done(const std::string& summary) const {
    return {pass_, pass_ ? summary : failures_};
  }

 private:
  bool pass_ = true;
  std::string failures_;
};

SexNum sx(const char* t, int radix = 60) { return parse_sexnum(t, radix); }

const SexNum kOne = SexNum::from_digits(1, {1}, {});
const std::vector<oracle::Rat> kFib{-20, 10, 2, 1};

std::string show(const SexNum& s) { return format(s); }

lab::Report scenario(const char* name) { return lab::run_scenario(*lab::find_builtin(name)); }

const lab::Verdict* verdict(const lab::Report& r, const std::string& output, lab::ExpectKind kind) {
  for (const auto& v : r.verdicts) {
    if (v.output == output && v.kind == kind) return &v;
  }
  return nullptr;
}

Outcome reference_digits() {
  Check c;
  const SexNum published = sx("1;22,7,42,33,4,38,30,50,15,43,13");
  const SexNum dbd =
      run_digit_by_digit(cubics::fibonacci(), kOne, 11, DivisorStrategy::horner_holdred()).root;
  const SexNum cardano = cardano_reference(11);
  const oracle::Int n = oracle::truncated_root_scaled(kFib, 1, 2, 11, 60);
  const auto bisect = oracle::scaled_digits(n, 11, 60);
  c.expect(dbd == published, "digit-by-digit gave " + show(dbd));
  c.expect(cardano == published, "cardano_reference(11) gave " + show(cardano));
  c.expect(bisect.integer == 1 && bisect.frac == published.frac_digits(),
           "bisection oracle disagrees");
  return c.done(show(dbd) + " from digit-by-digit, Cardano and bisection");
}

Outcome decimal_cross_check() {
  Check c;
  const std::string printed = "1.36880810785322371";
  const BigRational exact = to_rational(sx("1;22,7,42,33,4,40"));
  const std::string ours = to_decimal(exact, 17);
  const BigRational gap = abs_of(exact - parse_rational(printed));
  c.expect(ours == oracle::decimal(exact, 17), "decimal formatting disagrees with long division");
  c.expect(gap <= radix_pow(10, -17),
           "exact value is " + ours + ", printed " + printed + ", off by " +
               to_scientific(gap, 3) + " (> 1e-17)");
  return c.done(ours);
}

Outcome hand_rounding() {
  Check c;
  const BigRational x5 = to_rational(sx("1;22,7,42,33,4"));
  const int rounded = rounded_digit_bound(cubics::fibonacci(), x5, 6, 5, 0);
  const int exact = rounded_digit_bound(cubics::fibonacci(), x5, 6, std::nullopt, std::nullopt);
  // Oracle: floor(60^6 * (-p(x5)) / p'(x5)).
  const std::vector<oracle::Rat> dfib{10, 4, 3};
  const oracle::Int by_hand = oracle::floor_div(oracle::Rat(oracle::ipow(60, 6)) *
                                                -oracle::eval(kFib, x5) / oracle::eval(dfib, x5));
  c.expect(rounded == 40, "rounded bound " + std::to_string(rounded));
  c.expect(exact == 38, "exact bound " + std::to_string(exact));
  c.expect(by_hand == exact, "oracle exact bound " + by_hand.str());
  return c.done("rounded 40, exact 38");
}

Outcome hankel_constant() {
  Check c;
  const BigRational x5 = to_rational(sx("2;2,7,42,33,4"));
  const int bound = digit_bound(cubics::fibonacci_depressed(), x5, 6,
                                DivisorStrategy::constant_divisor(20));
  const std::vector<oracle::Rat> pd{oracle::frac(-704, 27), oracle::frac(26, 3), 0, 1};
  const oracle::Int by_hand = oracle::floor_div(oracle::Rat(oracle::ipow(60, 6)) *
                                                -oracle::eval(pd, x5) / 20);
  c.expect(bound == 40, "bound " + std::to_string(bound));
  c.expect(by_hand == 40, "oracle bound " + by_hand.str());
  return c.done("bound 40");
}

Outcome decimal_table() {
  Check c;
  DigitRun run = run_digit_by_digit(cubics::viete_example(), sx("200", 10), 0,
                                    DivisorStrategy::viete(), 10, {-1});
  c.expect(run.steps.size() == 2, "expected two steps");
  if (run.steps.size() == 2) {
    const auto& a = run.steps[0];
    const auto& b = run.steps[1];
    c.expect(a.x_before == 200 && b.x_before == 240, "x_{j-1}");
    c.expect(a.residual == 6350197 && b.residual == 524997, "residuals");
    c.expect(a.hbar == 10 && b.hbar == 1, "lower bounds on h");
    c.expect(a.divisor == 126030 && b.divisor == 173550, "divisors");
    c.expect(to_significant(a.hhat(), 3) == "50.4", "hhat j=2 " + to_significant(a.hhat(), 3));
    c.expect(to_significant(b.hhat(), 3) == "3.03", "hhat j=3 " + to_significant(b.hhat(), 3));
    c.expect(a.chosen_digit == 4 && b.chosen_digit == 3, "digits");
  }
  c.expect(show(run.root) == "243", "root " + show(run.root));
  return c.done("every cell reproduced, root 243");
}

Outcome gram_trace() {
  Check c;
  NrTrace t = run_gram();
  const char* want[] = {"2;2", "2;2,8", "2;2,7,42,32,25", "2;2,7,42,33,4,40"};
  c.expect(t.size() == 4, "expected four iterations");
  for (std::size_t i = 0; i < std::min<std::size_t>(4, t.size()); ++i) {
    c.expect(show(t[i].iterate) == want[i], "x" + std::to_string(i + 1) + " = " + show(t[i].iterate));
  }
  if (t.size() == 4) {
    const BigRational shifted = to_rational(t[3].iterate) - to_rational(sx("0;40"));
    c.expect(shifted == to_rational(sx("1;22,7,42,33,4,40")), "x4 - 0;40");
  }
  return c.done("x4 - 0;40 = 1;22,7,42,33,4,40");
}

Outcome regula_falsi() {
  Check c;
  SecantRun run = regula_falsi_fixed(cubics::fibonacci(), kOne, sx("2"), 6, 20);
  const int settled = run.stabilization_iteration(6);
  c.expect(show(run.result) == "1;22,7,42,33,4,38", "result " + show(run.result));
  c.expect(settled >= 14, "stabilized at " + std::to_string(settled));
  const oracle::Int hi = oracle::truncated_root_scaled(kFib, 1, 2, 20, 60) + 1;
  const oracle::Rat root_hi(hi, oracle::ipow(60, 20));
  bool below = true;
  for (const auto& r : run.rows) {
    below = below && to_rational(r.new_iterate) < root_hi &&
            oracle::eval(kFib, to_rational(r.new_iterate)) <= 0;
  }
  c.expect(below, "an iterate exceeds the root");
  return c.done("place VI settles at iteration " + std::to_string(settled) +
                ", all iterates below the root");
}

Outcome glushkov() {
  Check c;
  SecantRun run = secant_glushkov(cubics::fibonacci(), kOne, sx("2"), 18);
  c.expect(!run.rows.empty() && show(run.rows[0].new_iterate) == "1;18", "x1");
  c.expect(show(round_to(run.result, 6, RoundingMode::TruncateTowardZero)) == "1;22,7,42,33,4,38",
           "six places " + show(run.result));
  c.expect(run.rows.size() <= 18, "more than 18 iterations");
  lab::Report r = scenario("glushkov-secant");
  int info = 0;
  for (const char* k : {"x2", "x3", "x4", "x5"}) {
    for (const auto& v : r.verdicts) {
      if (v.output == k && v.status == lab::VerdictStatus::Info && !v.matched) ++info;
    }
  }
  c.expect(info >= 4, "published steps 2-5 not reported as INFO");
  c.expect(r.passed(), "scenario report failed");
  return c.done("x1 = 1;18, six places fixed at iteration " +
                std::to_string(run.stabilization_iteration(6)) + ", steps 2-5 reported as INFO");
}

Outcome albiruni() {
  Check c;
  DigitRun run = run_digit_by_digit(cubics::albiruni(), kOne, 6, DivisorStrategy::viete());
  c.expect(show(run.root) == "1;52,45,47,12,43,50", "root " + show(run.root));
  const std::vector<oracle::Rat> ab{-1, -3, 0, 1};
  const auto d = oracle::scaled_digits(oracle::truncated_root_scaled(ab, 1, 2, 6, 60), 6, 60);
  c.expect(d.frac == run.root.frac_digits(), "oracle digits differ");
  c.expect(show(round_to(run.root, 4, RoundingMode::AwayFromZero)) == "1;52,45,47,13",
           "rounded away");
  c.expect(run.root.frac_digits()[3] == 12 && run.root.frac_digits()[4] == 43, "tail 12,43");
  return c.done("1;52,45,47,12,43,50; rounded away to four places 1;52,45,47,13");
}

Outcome cassina() {
  Check c;
  const auto d = oracle::scaled_digits(oracle::truncated_root_scaled(kFib, 1, 2, 11, 60), 11, 60);
  c.expect(d.frac[9] == 43 && d.frac[10] == 13, "oracle places X, XI");
  lab::Report r = scenario("cassina-check");
  const lab::Verdict* v = verdict(r, "root", lab::ExpectKind::Refute);
  c.expect(v && v->status == lab::VerdictStatus::Mismatch, "no MISMATCH reported");
  c.expect(v && v->place == 10, "mismatch not at place X");
  return c.done("MISMATCH at place " + (v ? lab::place_name(v->place) : std::string("?")) +
                ": 42,45 published, 43,13 computed");
}

Outcome geometry() {
  Check c;
  auto ch = ConicConstruction::fibonacci_circle_hyperbola();
  c.expect(verify_identity(ch), "circle-hyperbola identity");
  c.expect(show(intersect_abscissa(ch, 1)) == "1;22", "abscissa to one place");
  auto ps = ConicConstruction::depressed_parabola_semicircle();
  c.expect(reduced_cubic(ps) == depress(cubics::fibonacci()).poly, "parabola cubic");
  c.expect(verify_identity(ps), "parabola-semicircle identity");
  return c.done("identities exact, abscissa 1;22");
}

// Criterion 12 runs compact versions of the property suites.
Outcome properties() {
  Check c;
  std::mt19937_64 rng(12);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int radices[] = {60, 10, 7};
  int fails[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 1000; ++i) {
    const int radix = radices[i % 3];
    // round-trip
    std::vector<int> fp;
    for (int k = pick(0, 5); k > 0; --k) fp.push_back(pick(0, radix - 1));
    SexNum s = SexNum::from_digits(pick(0, 1) ? 1 : -1, {pick(0, radix - 1)}, fp, radix);
    if (parse_sexnum(format(s), radix) != s ||
        from_rational(to_rational(s), s.frac_places(), RoundingMode::TruncateTowardZero, radix) != s) {
      ++fails[0];
    }
    // truncation bracketing
    const BigRational r = oracle::random_rational(rng, 1000000, 9973);
    const int places = pick(0, 5);
    const BigRational t =
        abs_of(to_rational(from_rational(r, places, RoundingMode::TruncateTowardZero, radix)));
    if (!(t <= abs_of(r) && abs_of(r) < t + radix_pow(radix, -places))) ++fails[1];
    // random monic cubic with a2, a1 >= 0 > a0
    std::vector<oracle::Rat> cc{oracle::frac(-pick(1, 3000), pick(1, 3)),
                                oracle::frac(pick(0, 30), pick(1, 3)), pick(0, 9), 1};
    Poly p(std::vector<BigRational>(cc.begin(), cc.end()));
    const oracle::Int ip = oracle::truncated_root_scaled(cc, 0, 1, 0, 10);
    const SexNum start = from_rational(BigRational(ip), 0, RoundingMode::TruncateTowardZero, radix);
    const int k = pick(1, 3);
    const SexNum root = run_digit_by_digit(p, start, k, DivisorStrategy::horner_holdred(), radix).root;
    const BigRational x = to_rational(root);
    if (!(oracle::eval(cc, x) <= 0 && oracle::eval(cc, x + radix_pow(radix, -k)) > 0)) ++fails[2];
    // bound soundness at the integer part for the first place
    const BigRational xi = BigRational(ip);
    int best = 0;
    for (int d = 1; d < radix; ++d) {
      if (oracle::eval(cc, xi + radix_pow(radix, -1) * d) <= 0) best = d;
    }
    for (auto st : {DivisorStrategy::horner_holdred(), DivisorStrategy::viete(), DivisorStrategy::wallis()}) {
      if (digit_bound(p, xi, 1, st, radix) < best) ++fails[3];
    }
    // strategy independence
    if (run_digit_by_digit(p, start, k, DivisorStrategy::wallis(), radix).root != root ||
        run_digit_by_digit(p, start, k, DivisorStrategy::viete(), radix, {1, DigitSearch::Ascending})
                .root != root) {
      ++fails[4];
    }
  }
  const char* names[] = {"round-trip", "truncation-bracketing", "digit-bracketing",
                         "bound-soundness", "strategy-independence"};
  for (int i = 0; i < 5; ++i) {
    c.expect(fails[i] == 0, std::string(names[i]) + ": " + std::to_string(fails[i]) + " failures");
  }
  return c.done("5 invariants x 1000 instances");
}

Outcome conjecture_replay() {
  Check c;
  const BigRational x5 = to_rational(sx("1;22,7,42,33,4"));
  const std::string at36 = to_scientific(trial_value(cubics::fibonacci(), x5, 36, 6), 7);
  const std::string at40 = to_scientific(trial_value(cubics::fibonacci(), x5, 40, 6), 7);
  const oracle::Rat step(1, oracle::ipow(60, 6));
  c.expect(at36 == to_scientific(oracle::eval(kFib, x5 + 36 * step), 7), "oracle disagrees at 36");
  c.expect(at36 == "-1.113673e-07", "k=36 gives " + at36 + ", published -1.113673e-07");
  c.expect(at40 == "6.719323e-10", "k=40 gives " + at40 + ", published 6.719323e-10");
  return c.done("k=36 " + at36 + ", k=40 " + at40);
}

const std::map<int, std::pair<const char*, std::function<Outcome()>>>& criteria() {
  static const std::map<int, std::pair<const char*, std::function<Outcome()>>> all{
      {1, {"reference digits", reference_digits}},
      {2, {"decimal cross-check", decimal_cross_check}},
      {3, {"hand-rounding reconstruction", hand_rounding}},
      {4, {"constant divisor 20", hankel_constant}},
      {5, {"decimal table", decimal_table}},
      {6, {"Gram trace", gram_trace}},
      {7, {"regula falsi", regula_falsi}},
      {8, {"Glushkov secant", glushkov}},
      {9, {"al-Biruni", albiruni}},
      {10, {"Cassina negative test", cassina}},
      {11, {"geometry", geometry}},
      {12, {"property suites", properties}},
      {13, {"conjecture replay", conjecture_replay}},
  };
  return all;
}

bool run_one(int id) {
  const auto& [name, fn] = criteria().at(id);
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << " (" << name << "): "
            << o.detail << "  [" << static_cast<long>(ms) << " ms]\n";
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    const int id = std::atoi(argv[2]);
    if (!criteria().count(id)) {
      std::cerr << "unknown criterion " << argv[2] << '\n';
      return 2;
    }
    return run_one(id) ? 0 : 1;
  }
  if (argc != 1) {
    std::cerr << "usage: acceptance [--criterion N]\n";
    return 2;
  }
  bool ok = true;
  for (const auto& [id, entry] : criteria()) ok = run_one(id) && ok;

  // Reported only: the published place VII of the constant-divisor run.
  NrTrace v = run_vetter(9);
  const auto& frac = v.back().iterate.frac_digits();
  std::cout << "INFO  constant-divisor Newton place VII: computed "
            << (frac.size() > 6 ? std::to_string(frac[6]) : std::string("-"))
            << ", published 33\n";
  return ok ? 0 : 1;
}
