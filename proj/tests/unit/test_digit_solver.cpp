#include "sexroot/digit_solver.hpp"
#include "sexroot/error.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace sexroot;

namespace {

const SexNum kOne = SexNum::from_digits(1, {1}, {});

std::vector<oracle::Rat> coeffs_of(const Poly& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

// Exact digit bound floor(-p(x) / (step * D)) with D written out per strategy.
int bound_by_hand(const Poly& p, const oracle::Rat& x, int place, int kind) {
  const auto c = coeffs_of(p);  // cubic a0 + a1 x + a2 x^2 + x^3
  oracle::Rat step = oracle::Rat(1) / oracle::Rat(oracle::ipow(60, place));
  oracle::Rat q1 = 3 * x * x + 2 * c[2] * x + c[1];
  oracle::Rat q2 = 3 * x + c[2];
  oracle::Rat d = q1;
  if (kind >= 1) d += step * q2;
  if (kind >= 2) d += step * step;
  oracle::Rat h = -oracle::eval(c, x) / (step * d);
  return std::min(59, oracle::floor_div(h).convert_to<int>());
}

}  // namespace

TEST(DigitSolver, StrategyNames) {
  for (auto s : {DivisorStrategy::horner_holdred(), DivisorStrategy::viete(),
                 DivisorStrategy::wallis(), DivisorStrategy::constant_divisor(20)}) {
    EXPECT_EQ(parse_divisor_strategy(to_string(s)), s);
  }
  EXPECT_EQ(parse_divisor_strategy("constant:21/2").constant, rational(21, 2));
  EXPECT_THROW(DivisorStrategy::constant_divisor(0), DomainError);
  EXPECT_THROW(parse_divisor_strategy("newton"), ParseError);
}

TEST(DigitSolver, BoundsAgreeWithHandFormula) {
  const Poly p = cubics::fibonacci();
  const oracle::Rat x = rational(41, 30);
  EXPECT_EQ(digit_bound(p, x, 2, DivisorStrategy::horner_holdred()), bound_by_hand(p, x, 2, 0));
  EXPECT_EQ(digit_bound(p, x, 2, DivisorStrategy::viete()), bound_by_hand(p, x, 2, 1));
  EXPECT_EQ(digit_bound(p, x, 2, DivisorStrategy::wallis()), bound_by_hand(p, x, 2, 2));
}

TEST(DigitSolver, FirstFractionalDigit) {
  DigitStep s = select_digit(cubics::fibonacci(), 1, 1, DivisorStrategy::horner_holdred());
  EXPECT_EQ(s.residual, 7);
  EXPECT_EQ(s.divisor, 17);
  EXPECT_EQ(s.bound_digit, 24);  // floor(60 * 7 / 17)
  EXPECT_EQ(s.chosen_digit, 22);
  EXPECT_EQ(s.tests_performed, 3);
}

TEST(DigitSolver, ElevenPlacesMatchOracle) {
  const Poly p = cubics::fibonacci();
  DigitRun run = run_digit_by_digit(p, kOne, 11, DivisorStrategy::viete());
  oracle::Int n = oracle::truncated_root_scaled(coeffs_of(p), 1, 2, 11, 60);
  EXPECT_EQ(run.root.frac_digits(), oracle::scaled_digits(n, 11, 60).frac);
  EXPECT_EQ(run.steps.size(), 11u);
}

TEST(DigitSolver, AscendingSearchAgrees) {
  const Poly p = cubics::fibonacci();
  auto a = run_digit_by_digit(p, kOne, 6, DivisorStrategy::viete());
  auto b = run_digit_by_digit(p, kOne, 6, DivisorStrategy::viete(), 60,
                              {1, DigitSearch::Ascending});
  EXPECT_EQ(a.root, b.root);
  EXPECT_GT(b.total_tests(), a.total_tests());
}

TEST(DigitSolver, UnsoundConstantStillFindsDigit) {
  // Constant 30 exceeds p'(x) near the root, so the bound may be too small.
  const Poly p = cubics::fibonacci();
  auto strategy = DivisorStrategy::constant_divisor(30);
  EXPECT_FALSE(bound_is_sound(strategy, p, rational(41, 30)));
  auto run = run_digit_by_digit(p, kOne, 6, strategy);
  auto ref = run_digit_by_digit(p, kOne, 6, DivisorStrategy::horner_holdred());
  EXPECT_EQ(run.root, ref.root);
}

TEST(DigitSolver, DecimalTable) {
  const Poly p = cubics::viete_example();
  auto run = run_digit_by_digit(p, parse_sexnum("200", 10), 0, DivisorStrategy::viete(), 10,
                                {-1, DigitSearch::BoundThenVerify});
  ASSERT_EQ(run.steps.size(), 2u);
  EXPECT_EQ(run.steps[0].residual, 6350197);
  EXPECT_EQ(run.steps[0].divisor, 126030);
  EXPECT_EQ(run.steps[0].chosen_digit, 4);
  EXPECT_EQ(run.steps[1].residual, 524997);
  EXPECT_EQ(run.steps[1].divisor, 173550);
  EXPECT_EQ(run.steps[1].chosen_digit, 3);
  EXPECT_EQ(format(run.root), "243");
  EXPECT_EQ(estimate_integer_digits(p, 10), 3);
}

TEST(DigitSolver, BracketViolations) {
  const Poly p = cubics::fibonacci();
  EXPECT_THROW(run_digit_by_digit(p, SexNum::from_digits(1, {2}, {}), 3,
                                  DivisorStrategy::viete()),
               DomainError);
  EXPECT_THROW(run_digit_by_digit(p, kOne, 3, DivisorStrategy::viete(), 10), DomainError);
  EXPECT_THROW(select_digit(p, 2, 1, DivisorStrategy::viete()), DomainError);
}

TEST(DigitSolver, HandRoundedBound) {
  const Poly p = cubics::fibonacci();
  const BigRational x5 = to_rational(parse_sexnum("1;22,7,42,33,4"));
  EXPECT_EQ(rounded_digit_bound(p, x5, 6, 5, 0), 40);
  EXPECT_EQ(rounded_digit_bound(p, x5, 6, std::nullopt, std::nullopt), 38);
  EXPECT_EQ(trial_value(p, x5, 38, 6) <= 0, true);
  EXPECT_EQ(trial_value(p, x5, 39, 6) > 0, true);
}

TEST(DigitSolver, CsvHeader) {
  auto run = run_digit_by_digit(cubics::fibonacci(), kOne, 2, DivisorStrategy::viete());
  std::string csv = to_csv(run.steps);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "j,x_before,residual,hbar,divisor,bound,chosen,tests");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}
