#include "sexroot/sexnum.hpp"

#include "sexroot/error.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace sexroot {

namespace {

constexpr std::string_view kDegree = "\xC2\xB0";  // U+00B0 in UTF-8

void check_radix(int radix) {
  if (radix < 2) {
    throw DomainError("radix must be at least 2, got " + std::to_string(radix));
  }
}

std::vector<int> to_digits(BigInt n, int radix) {
  std::vector<int> digits;
  if (n == 0) {
    digits.push_back(0);
    return digits;
  }
  while (n > 0) {
    digits.push_back(static_cast<int>(n % radix));
    n /= radix;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt round_magnitude(const BigRational& scaled, RoundingMode mode) {
  switch (mode) {
    case RoundingMode::TruncateTowardZero:
      return floor_of(scaled);
    case RoundingMode::AwayFromZero:
      return ceil_of(scaled);
    case RoundingMode::NearestHalfAwayFromZero:
      return floor_of(scaled + rational(1, 2));
  }
  return floor_of(scaled);
}

}  // namespace

SexNum SexNum::from_digits(int sign, std::vector<int> int_digits, std::vector<int> frac_digits,
                           int radix) {
  check_radix(radix);
  if (sign != 1 && sign != -1) {
    throw DomainError("sign must be +1 or -1");
  }
  auto check = [radix](int d) {
    if (d < 0 || d >= radix) {
      throw DomainError("digit " + std::to_string(d) + " out of range for radix " +
                        std::to_string(radix));
    }
  };
  std::for_each(int_digits.begin(), int_digits.end(), check);
  std::for_each(frac_digits.begin(), frac_digits.end(), check);

  auto first = std::find_if(int_digits.begin(), int_digits.end(), [](int d) { return d != 0; });
  int_digits.erase(int_digits.begin(), first);
  if (int_digits.empty()) int_digits.push_back(0);

  SexNum s;
  s.radix_ = radix;
  s.int_digits_ = std::move(int_digits);
  s.frac_digits_ = std::move(frac_digits);
  s.sign_ = s.is_zero() ? 1 : sign;
  return s;
}

bool SexNum::is_zero() const {
  auto zero = [](int d) { return d == 0; };
  return std::all_of(int_digits_.begin(), int_digits_.end(), zero) &&
         std::all_of(frac_digits_.begin(), frac_digits_.end(), zero);
}

BigInt SexNum::integer_part() const {
  BigInt n = 0;
  for (int d : int_digits_) n = n * radix_ + d;
  return n;
}

BigRational round_rational(const BigRational& r, int frac_places, RoundingMode mode, int radix) {
  check_radix(radix);
  if (frac_places < 0) {
    throw DomainError("negative number of fractional places");
  }
  BigInt scale = int_pow(radix, static_cast<unsigned>(frac_places));
  BigInt n = round_magnitude(abs_of(r) * BigRational(scale), mode);
  BigRational magnitude(n, scale);
  return r < 0 ? BigRational(-magnitude) : magnitude;
}

SexNum from_rational(const BigRational& r, int frac_places, RoundingMode mode, int radix) {
  check_radix(radix);
  if (frac_places < 0) {
    throw DomainError("negative number of fractional places");
  }
  BigInt scale = int_pow(radix, static_cast<unsigned>(frac_places));
  BigInt n = round_magnitude(abs_of(r) * BigRational(scale), mode);

  std::vector<int> frac(static_cast<std::size_t>(frac_places));
  for (int i = frac_places - 1; i >= 0; --i) {
    frac[static_cast<std::size_t>(i)] = static_cast<int>(n % radix);
    n /= radix;
  }
  return SexNum::from_digits(r < 0 ? -1 : 1, to_digits(n, radix), std::move(frac), radix);
}

BigRational to_rational(const SexNum& s) {
  BigInt n = s.integer_part();
  for (int d : s.frac_digits()) n = n * s.radix() + d;
  BigRational value(n, int_pow(s.radix(), static_cast<unsigned>(s.frac_places())));
  return s.sign() < 0 ? BigRational(-value) : value;
}

SexNum round_to(const SexNum& s, int frac_places, RoundingMode mode) {
  if (frac_places >= s.frac_places()) return s;
  return from_rational(to_rational(s), frac_places, mode, s.radix());
}

SexNum fixed_arith(const SexNum& a, const SexNum& b, ArithOp op, int frac_places,
                   RoundingMode mode) {
  if (a.radix() != b.radix()) {
    throw DomainError("fixed_arith operands have different radices");
  }
  BigRational x = to_rational(a);
  BigRational y = to_rational(b);
  BigRational r;
  switch (op) {
    case ArithOp::Add: r = x + y; break;
    case ArithOp::Subtract: r = x - y; break;
    case ArithOp::Multiply: r = x * y; break;
    case ArithOp::Divide:
      if (y == 0) throw DomainError("division by zero");
      r = x / y;
      break;
  }
  return from_rational(r, frac_places, mode, a.radix());
}

std::string to_roman(int n) {
  static constexpr std::pair<int, const char*> table[] = {
      {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"}, {90, "XC"},
      {50, "L"},   {40, "XL"},  {10, "X"},  {9, "IX"},   {5, "V"},   {4, "IV"},  {1, "I"}};
  std::string out;
  for (auto [value, numeral] : table) {
    while (n >= value) {
      out += numeral;
      n -= value;
    }
  }
  return out;
}

std::string place_marker(int position) {
  if (position >= 1 && position <= 3) return std::string(static_cast<std::size_t>(position), '\'');
  return "^" + to_roman(position);
}

std::string format(const SexNum& s, NumberStyle style) {
  std::string out = s.sign() < 0 ? "-" : "";
  out += s.integer_part().str();
  if (style == NumberStyle::Compact) {
    if (!s.frac_digits().empty()) {
      out += ';';
      for (std::size_t i = 0; i < s.frac_digits().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s.frac_digits()[i]);
      }
    }
    return out;
  }
  out += kDegree;
  for (std::size_t i = 0; i < s.frac_digits().size(); ++i) {
    out += std::to_string(s.frac_digits()[i]);
    out += place_marker(static_cast<int>(i) + 1);
  }
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text), rest_(text) {}

  bool done() const { return rest_.empty(); }
  char peek() const { return rest_.empty() ? '\0' : rest_.front(); }
  bool consume(std::string_view token) {
    if (rest_.substr(0, token.size()) == token) {
      rest_.remove_prefix(token.size());
      return true;
    }
    return false;
  }
  void skip_space() {
    while (!rest_.empty() && std::isspace(static_cast<unsigned char>(rest_.front()))) {
      rest_.remove_prefix(1);
    }
  }
  std::string_view take_while(int (*pred)(int)) {
    std::size_t n = 0;
    while (n < rest_.size() && pred(static_cast<unsigned char>(rest_[n]))) ++n;
    std::string_view out = rest_.substr(0, n);
    rest_.remove_prefix(n);
    return out;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in '" + std::string(text_) + "' at offset " +
                     std::to_string(text_.size() - rest_.size()));
  }

 private:
  std::string_view text_;
  std::string_view rest_;
};

int parse_digit(Cursor& cur, int radix) {
  std::string_view digits = cur.take_while(::isdigit);
  if (digits.empty()) cur.fail("empty digit group");
  if (digits.size() > 9) cur.fail("digit too large");
  int d = std::stoi(std::string(digits));
  if (d >= radix) {
    cur.fail("digit " + std::to_string(d) + " not below radix " + std::to_string(radix));
  }
  return d;
}

int roman_value(std::string_view s) {
  int total = 0;
  auto value = [](char c) {
    switch (c) {
      case 'I': return 1;
      case 'V': return 5;
      case 'X': return 10;
      case 'L': return 50;
      case 'C': return 100;
      case 'D': return 500;
      case 'M': return 1000;
      default: return 0;
    }
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    int v = value(s[i]);
    if (v == 0) return 0;
    if (i + 1 < s.size() && v < value(s[i + 1])) {
      total -= v;
    } else {
      total += v;
    }
  }
  // Only canonical spellings count ("IIII" or "VX" are malformed).
  return to_roman(total) == s ? total : 0;
}

int parse_marker(Cursor& cur) {
  if (cur.peek() == '\'') {
    std::string_view ticks = cur.take_while([](int c) { return c == '\'' ? 1 : 0; });
    if (ticks.size() > 3) cur.fail("more than three primes; use ^IV and up");
    return static_cast<int>(ticks.size());
  }
  if (cur.consume("^")) {
    bool braced = cur.consume("{");
    std::string_view numeral = cur.take_while(::isupper);
    if (braced && !cur.consume("}")) cur.fail("unterminated superscript");
    int position = roman_value(numeral);
    if (position < 4) cur.fail("malformed superscript '" + std::string(numeral) + "'");
    return position;
  }
  cur.fail("missing place marker");
}

BigInt parse_integer_part(Cursor& cur) {
  std::string_view digits = cur.take_while(::isdigit);
  if (digits.empty()) cur.fail("missing integer part");
  return BigInt(std::string(digits));
}

}  // namespace

SexNum parse_sexnum(std::string_view text, int radix) {
  check_radix(radix);
  Cursor cur(text);
  cur.skip_space();
  int sign = cur.consume("-") ? -1 : 1;
  BigInt integer = parse_integer_part(cur);
  std::vector<int> frac;

  cur.skip_space();
  if (cur.consume(kDegree)) {
    for (int position = 1;; ++position) {
      cur.skip_space();
      if (cur.done()) break;
      frac.push_back(parse_digit(cur, radix));
      if (parse_marker(cur) != position) {
        cur.fail("place marker out of sequence (expected " + place_marker(position) + ")");
      }
    }
  } else if (cur.consume(";")) {
    cur.skip_space();
    if (!cur.done()) {
      frac.push_back(parse_digit(cur, radix));
      while (cur.consume(",")) frac.push_back(parse_digit(cur, radix));
    }
  }
  cur.skip_space();
  if (!cur.done()) cur.fail("unexpected character");

  return SexNum::from_digits(sign, to_digits(integer, radix), std::move(frac), radix);
}

std::string to_string(RoundingMode mode) {
  switch (mode) {
    case RoundingMode::TruncateTowardZero: return "truncate";
    case RoundingMode::AwayFromZero: return "away";
    case RoundingMode::NearestHalfAwayFromZero: return "nearest";
  }
  return "truncate";
}

RoundingMode parse_rounding_mode(std::string_view text) {
  if (text == "truncate" || text == "TruncateTowardZero") return RoundingMode::TruncateTowardZero;
  if (text == "away" || text == "AwayFromZero") return RoundingMode::AwayFromZero;
  if (text == "nearest" || text == "NearestHalfAwayFromZero") {
    return RoundingMode::NearestHalfAwayFromZero;
  }
  throw ParseError("unknown rounding mode '" + std::string(text) + "'");
}

std::ostream& operator<<(std::ostream& os, const SexNum& s) { return os << format(s); }

}  // namespace sexroot
