#include "sexroot/digit_solver.hpp"

#include "sexroot/error.hpp"

#include <algorithm>
#include <sstream>

namespace sexroot {

DivisorStrategy DivisorStrategy::constant_divisor(const BigRational& c) {
  if (c <= 0) {
    throw DomainError("constant divisor must be positive, got " + to_string(c));
  }
  return {Kind::Constant, c};
}

std::string to_string(const DivisorStrategy& s) {
  switch (s.kind) {
    case DivisorStrategy::Kind::HornerHoldred: return "horner-holdred";
    case DivisorStrategy::Kind::Viete: return "viete";
    case DivisorStrategy::Kind::Wallis: return "wallis";
    case DivisorStrategy::Kind::Constant: return "constant:" + to_string(s.constant);
  }
  return "viete";
}

DivisorStrategy parse_divisor_strategy(std::string_view text) {
  if (text == "horner-holdred" || text == "horner" || text == "holdred") {
    return DivisorStrategy::horner_holdred();
  }
  if (text == "viete") return DivisorStrategy::viete();
  if (text == "wallis") return DivisorStrategy::wallis();
  constexpr std::string_view prefix = "constant:";
  if (text.substr(0, prefix.size()) == prefix) {
    return DivisorStrategy::constant_divisor(parse_rational(text.substr(prefix.size())));
  }
  throw ParseError("unknown divisor strategy '" + std::string(text) + "'");
}

namespace {

BigRational taylor_at(const std::vector<Poly>& q, int k, const BigRational& x) {
  return k < static_cast<int>(q.size()) ? eval(q[static_cast<std::size_t>(k)], x) : BigRational(0);
}

BigRational hbar_for(const DivisorStrategy& strategy, const BigRational& step) {
  switch (strategy.kind) {
    case DivisorStrategy::Kind::Viete:
    case DivisorStrategy::Kind::Wallis:
      return step;
    default:
      return 0;
  }
}

void require_nonpositive(const Poly& p, const BigRational& x) {
  if (eval(p, x) > 0) {
    throw DomainError("p(" + to_string(x) + ") > 0: x is already past the root");
  }
}

}  // namespace

namespace {

BigRational raw_divisor(const DivisorStrategy& strategy, const Poly& p, const BigRational& x,
                        const BigRational& hbar) {
  if (hbar < 0) throw DomainError("hbar must be nonnegative");
  if (strategy.kind == DivisorStrategy::Kind::Constant) return strategy.constant;
  std::vector<Poly> q = shift(p);
  BigRational d = taylor_at(q, 1, x);
  if (strategy.kind == DivisorStrategy::Kind::Viete) {
    d += hbar * taylor_at(q, 2, x);
  } else if (strategy.kind == DivisorStrategy::Kind::Wallis) {
    BigRational power = hbar;
    for (int k = 2; k < static_cast<int>(q.size()); ++k) {
      d += power * taylor_at(q, k, x);
      power *= hbar;
    }
  }
  if (d < 0) {
    throw DomainError(to_string(strategy) + " divisor at x=" + to_string(x) + " is negative (" +
                      to_string(d) + ")");
  }
  return d;
}

// floor(residual / (step * d)) clamped to radix - 1; a zero divisor bounds nothing.
int clamp_bound(const BigRational& residual, const BigRational& step, const BigRational& d,
                int radix) {
  if (d == 0) return residual > 0 ? radix - 1 : 0;
  BigInt bound = floor_of(residual / (step * d));
  return bound > radix - 1 ? radix - 1 : static_cast<int>(bound);
}

}  // namespace

BigRational divisor_value(const DivisorStrategy& strategy, const Poly& p, const BigRational& x,
                          const BigRational& hbar) {
  BigRational d = raw_divisor(strategy, p, x, hbar);
  if (d == 0) {
    throw DomainError(to_string(strategy) + " divisor at x=" + to_string(x) + " is zero");
  }
  return d;
}

int digit_bound(const Poly& p, const BigRational& x, int place, const DivisorStrategy& strategy,
                int radix) {
  require_nonpositive(p, x);
  BigRational step = radix_pow(radix, -place);
  BigRational d = raw_divisor(strategy, p, x, hbar_for(strategy, step));
  return clamp_bound(-eval(p, x), step, d, radix);
}

bool bound_is_sound(const DivisorStrategy& strategy, const Poly& p, const BigRational& x) {
  std::vector<Poly> q = shift(p);
  for (int k = 2; k < static_cast<int>(q.size()); ++k) {
    if (eval(q[static_cast<std::size_t>(k)], x) < 0) return false;
  }
  if (strategy.kind == DivisorStrategy::Kind::Constant) {
    return strategy.constant <= taylor_at(q, 1, x);
  }
  return true;
}

DigitStep select_digit(const Poly& p, const BigRational& x, int place,
                       const DivisorStrategy& strategy, int radix, DigitSearch search) {
  BigRational value = eval(p, x);
  if (value > 0) {
    throw DomainError("no admissible digit at place " + std::to_string(place) + ": p(" +
                      to_string(x) + ") > 0");
  }
  const BigRational step = radix_pow(radix, -place);
  Poly dp = derivative(p);
  if (eval(dp, x) < 0 || eval(dp, x + step * radix) <= 0) {
    throw DomainError("p is not increasing across the search interval at x=" + to_string(x));
  }

  DigitStep out;
  out.place = place;
  out.x_before = x;
  out.residual = -value;
  out.hbar = hbar_for(strategy, step);
  out.divisor = raw_divisor(strategy, p, x, out.hbar);
  out.bound_digit = digit_bound(p, x, place, strategy, radix);

  auto admissible = [&](int alpha) {
    ++out.tests_performed;
    return eval(p, x + step * alpha) <= 0;
  };

  int alpha = 0;
  if (search == DigitSearch::Ascending) {
    while (alpha + 1 < radix && admissible(alpha + 1)) ++alpha;
  } else {
    alpha = out.bound_digit;
    while (alpha > 0 && !admissible(alpha)) --alpha;
    if (alpha == out.bound_digit && !bound_is_sound(strategy, p, x)) {
      while (alpha + 1 < radix && admissible(alpha + 1)) ++alpha;
    }
  }
  out.chosen_digit = alpha;
  return out;
}

int DigitRun::total_tests() const {
  int n = 0;
  for (const auto& s : steps) n += s.tests_performed;
  return n;
}

DigitRun run_digit_by_digit(const Poly& p, const SexNum& start, int frac_places,
                            const DivisorStrategy& strategy, int radix, DigitRunOptions options) {
  if (start.radix() != radix) {
    throw DomainError("start value radix differs from the run radix");
  }
  BigRational x = to_rational(start);
  BigRational coarse = radix_pow(radix, -(options.first_place - 1));
  if (!(eval(p, x) <= 0 && eval(p, x + coarse) > 0)) {
    throw DomainError("start " + format(start) + " does not bracket the root: need p(x) <= 0 < " +
                      "p(x + " + to_string(coarse) + ")");
  }
  DigitRun run;
  for (int place = options.first_place; place <= frac_places; ++place) {
    DigitStep step = select_digit(p, x, place, strategy, radix, options.search);
    x += radix_pow(radix, -place) * step.chosen_digit;
    run.steps.push_back(std::move(step));
  }
  run.root = from_rational(x, std::max(frac_places, 0), RoundingMode::TruncateTowardZero, radix);
  return run;
}

int rounded_digit_bound(const Poly& p, const BigRational& x, int place,
                        std::optional<int> num_places, std::optional<int> den_places, int radix) {
  require_nonpositive(p, x);
  BigRational numerator = -eval(p, x);
  if (num_places) {
    numerator = round_rational(numerator, *num_places, RoundingMode::AwayFromZero, radix);
  }
  BigRational denominator = eval(derivative(p), x);
  if (den_places) {
    denominator =
        round_rational(denominator, *den_places, RoundingMode::TruncateTowardZero, radix);
  }
  if (denominator == 0) throw DomainError("denominator truncates to zero");
  return static_cast<int>(floor_of(numerator / denominator * radix_pow(radix, place)));
}

BigRational trial_value(const Poly& p, const BigRational& x, int digit, int place, int radix) {
  return eval(p, x + radix_pow(radix, -place) * digit);
}

int estimate_integer_digits(const Poly& p, int radix) {
  if (p.degree() != 3 || !p.is_monic() || p.coeff(0) >= 0) {
    throw DomainError("estimate_integer_digits needs a monic cubic with negative constant term");
  }
  BigInt d = floor_of(-p.coeff(0));
  BigInt lo = 0;
  BigInt hi = 1;
  while (hi * hi * hi <= d) hi *= 2;
  while (hi - lo > 1) {  // lo^3 <= d < hi^3
    BigInt mid = (lo + hi) / 2;
    if (mid * mid * mid <= d) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  int digits = 0;
  for (BigInt n = lo; n > 0; n /= radix) ++digits;
  return std::max(digits, 1);
}

std::string to_csv(const std::vector<DigitStep>& steps) {
  std::ostringstream out;
  out << "j,x_before,residual,hbar,divisor,bound,chosen,tests\n";
  for (const auto& s : steps) {
    out << s.place << ',' << to_string(s.x_before) << ',' << to_string(s.residual) << ','
        << to_string(s.hbar) << ',' << to_string(s.divisor) << ',' << s.bound_digit << ','
        << s.chosen_digit << ',' << s.tests_performed << '\n';
  }
  return out.str();
}

}  // namespace sexroot
