#include "sexroot/rational.hpp"

#include "sexroot/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace sexroot {

BigInt floor_of(const BigRational& r) {
  BigInt n = num_of(r);
  BigInt d = den_of(r);
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) {
    q -= 1;
  }
  return q;
}

BigInt ceil_of(const BigRational& r) { return -floor_of(-r); }

BigInt int_pow(long long base, unsigned exp) {
  return mp::pow(BigInt(base), exp);
}

BigRational radix_pow(int radix, int exp) {
  if (exp >= 0) {
    return BigRational(int_pow(radix, static_cast<unsigned>(exp)));
  }
  return BigRational(BigInt(1), int_pow(radix, static_cast<unsigned>(-exp)));
}

BigRational abs_of(const BigRational& r) { return r < 0 ? BigRational(-r) : r; }

int sign_of(const BigRational& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

std::string to_string(const BigRational& r) {
  if (den_of(r) == 1) {
    return num_of(r).str();
  }
  return num_of(r).str() + "/" + den_of(r).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  BigRational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view n = s.substr(0, slash);
    std::string_view d = s.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt den{std::string(d)};
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    value = BigRational(BigInt(std::string(n)), den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp)) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
    BigInt whole = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
    BigInt frac{std::string(fp)};
    BigInt scale = int_pow(10, static_cast<unsigned>(fp.size()));
    value = BigRational(whole * scale + frac, scale);
  } else {
    if (!all_digits(s)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    value = BigRational(BigInt(std::string(s)));
  }
  return negative ? BigRational(-value) : value;
}

std::string to_decimal(const BigRational& r, int decimals) {
  BigInt scale = int_pow(10, static_cast<unsigned>(decimals));
  BigRational scaled = abs_of(r) * BigRational(scale);
  BigInt n = floor_of(scaled + rational(1, 2));
  std::string digits = n.str();
  if (static_cast<int>(digits.size()) <= decimals) {
    digits.insert(0, static_cast<std::size_t>(decimals + 1) - digits.size(), '0');
  }
  std::string out = (r < 0 && n != 0) ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<std::size_t>(decimals));
  if (decimals > 0) {
    out += "." + digits.substr(digits.size() - static_cast<std::size_t>(decimals));
  }
  return out;
}

std::string to_scientific(const BigRational& r, int sig) {
  if (sig < 1) {
    throw DomainError("to_scientific needs at least one significant digit");
  }
  if (r == 0) {
    return "0." + std::string(static_cast<std::size_t>(sig - 1), '0') + "e+00";
  }
  BigRational m = abs_of(r);
  // Find e with 10^e <= m < 10^(e+1).
  int e = static_cast<int>(num_of(m).str().size()) - static_cast<int>(den_of(m).str().size());
  while (m < radix_pow(10, e)) --e;
  while (m >= radix_pow(10, e + 1)) ++e;
  BigInt n = floor_of(m * radix_pow(10, sig - 1 - e) + rational(1, 2));
  if (n == int_pow(10, static_cast<unsigned>(sig))) {  // rounding carried into a new digit
    n /= 10;
    ++e;
  }
  std::string digits = n.str();
  std::string out = r < 0 ? "-" : "";
  out += digits.substr(0, 1);
  if (sig > 1) out += "." + digits.substr(1);
  char exp[16];
  std::snprintf(exp, sizeof exp, "e%c%02d", e < 0 ? '-' : '+', e < 0 ? -e : e);
  return out + exp;
}

std::string to_significant(const BigRational& r, int sig) {
  if (sig < 1) {
    throw DomainError("to_significant needs at least one significant digit");
  }
  if (r == 0) return to_decimal(r, sig - 1);
  BigRational m = abs_of(r);
  int e = 0;
  while (m < radix_pow(10, e)) --e;
  while (m >= radix_pow(10, e + 1)) ++e;
  return to_decimal(r, std::max(0, sig - 1 - e));
}

double to_double(const BigRational& r) { return r.convert_to<double>(); }

}  // namespace sexroot
