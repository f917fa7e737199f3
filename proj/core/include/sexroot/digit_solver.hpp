#pragma once

/// Digit-by-digit root extraction.
///
/// Each positional digit is the largest alpha with p(x + alpha*step) <= 0,
/// where step = radix^-place. An upper bound for alpha comes from the
/// binomial expansion p(x+h) = p(x) + h*(q1(x) + h*q2(x) + h^2*q3(x)):
///
///   alpha <= floor( -p(x) / (step * D) )
///
/// with the divisor D chosen by a DivisorStrategy:
///   HornerHoldred  q1(x)                       (lower bound on h is 0)
///   Viete          q1(x) + hbar*q2(x)          (hbar = step)
///   Wallis         q1(x) + hbar*q2(x) + hbar^2*q3(x)
///   Constant       a fixed c > 0
///
/// Places are signed exponents: fractional places are 1, 2, ...; the units
/// place is 0 and the tens place -1.

#include "sexroot/poly.hpp"
#include "sexroot/rational.hpp"
#include "sexroot/sexnum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sexroot {

struct DivisorStrategy {
  enum class Kind { HornerHoldred, Viete, Wallis, Constant };

  Kind kind = Kind::Viete;
  BigRational constant;  // only for Kind::Constant

  static DivisorStrategy horner_holdred() { return {Kind::HornerHoldred, {}}; }
  static DivisorStrategy viete() { return {Kind::Viete, {}}; }
  static DivisorStrategy wallis() { return {Kind::Wallis, {}}; }
  /// Throws DomainError unless c > 0.
  static DivisorStrategy constant_divisor(const BigRational& c);

  friend bool operator==(const DivisorStrategy&, const DivisorStrategy&) = default;
};

std::string to_string(const DivisorStrategy& s);
/// "horner-holdred", "viete", "wallis", or "constant:<rational>".
DivisorStrategy parse_divisor_strategy(std::string_view text);

enum class DigitSearch {
  BoundThenVerify,  // start at the bound and walk down
  Ascending,        // test 1, 2, 3, ... until the sign flips
};

struct DigitStep {
  int place = 0;
  BigRational x_before;
  BigRational residual;  // -p(x_before)
  BigRational hbar;
  BigRational divisor;
  int bound_digit = 0;
  int chosen_digit = 0;
  int tests_performed = 0;  // polynomial evaluations spent choosing the digit

  /// Upper bound on the whole increment h, residual / divisor. Requires a
  /// nonzero divisor.
  BigRational hhat() const { return residual / divisor; }
};

/// Throws DomainError unless the divisor is positive.
BigRational divisor_value(const DivisorStrategy& strategy, const Poly& p, const BigRational& x,
                          const BigRational& hbar);

/// floor(-p(x) / (step * divisor)) clamped to radix - 1; radix - 1 when the
/// divisor is zero and p(x) < 0.
int digit_bound(const Poly& p, const BigRational& x, int place, const DivisorStrategy& strategy,
                int radix = kDefaultRadix);

/// Whether digit_bound is a proven upper bound at x: q_k(x) >= 0 for k >= 2,
/// and for a constant divisor also c <= q1(x).
bool bound_is_sound(const DivisorStrategy& strategy, const Poly& p, const BigRational& x);

DigitStep select_digit(const Poly& p, const BigRational& x, int place,
                       const DivisorStrategy& strategy, int radix = kDefaultRadix,
                       DigitSearch search = DigitSearch::BoundThenVerify);

struct DigitRunOptions {
  /// Place of the first digit to determine; the start value must bracket the
  /// root at the granularity radix^-(first_place - 1).
  int first_place = 1;
  DigitSearch search = DigitSearch::BoundThenVerify;
};

struct DigitRun {
  SexNum root;
  std::vector<DigitStep> steps;

  int total_tests() const;
};

/// Extracts digits from options.first_place through `frac_places`.
DigitRun run_digit_by_digit(const Poly& p, const SexNum& start, int frac_places,
                            const DivisorStrategy& strategy, int radix = kDefaultRadix,
                            DigitRunOptions options = {});

/// The hand computation of a digit bound: -p(x) rounded away from zero to
/// `num_places` digits, divided by p'(x) truncated to `den_places` digits,
/// floored at `place`. nullopt leaves that side exact.
int rounded_digit_bound(const Poly& p, const BigRational& x, int place,
                        std::optional<int> num_places, std::optional<int> den_places,
                        int radix = kDefaultRadix);

/// p(x + digit * radix^-place), for replaying individual trial digits.
BigRational trial_value(const Poly& p, const BigRational& x, int digit, int place,
                        int radix = kDefaultRadix);

/// Number of integer digits of the positive root of a monic cubic
/// x^3 + ... - d with a small linear term, from the cube root of d. A hint
/// only: the caller still has to supply a verified bracket.
int estimate_integer_digits(const Poly& p, int radix = kDefaultRadix);

/// Header `j,x_before,residual,hbar,divisor,bound,chosen,tests`.
std::string to_csv(const std::vector<DigitStep>& steps);

}  // namespace sexroot
