#pragma once

// Reference computations for the tests. Deliberately naive and independent
// of the library: plain power sums, integer bisection on a scaled grid, and
// digit expansion by repeated multiplication. Only the Boost number types
// are shared.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

namespace mp = boost::multiprecision;
using Int = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rat = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline Rat frac(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

inline Int ipow(long long base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline Rat rpow(const Rat& x, int exp) {
  Rat r = 1;
  for (int i = 0; i < exp; ++i) r *= x;
  return r;
}

// sum c_i x^i, each power formed separately.
inline Rat eval(const std::vector<Rat>& coeffs, const Rat& x) {
  Rat sum = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) sum += coeffs[i] * rpow(x, static_cast<int>(i));
  return sum;
}

inline Int floor_div(const Rat& r) {
  Int n = mp::numerator(r);
  Int d = mp::denominator(r);
  Int q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

// Largest n with p(n / radix^places) <= 0 for n in [lo*R^k, hi*R^k], given
// p(lo) <= 0 < p(hi) and a single sign change. Returns n.
inline Int truncated_root_scaled(const std::vector<Rat>& coeffs, const Rat& lo, const Rat& hi,
                                 int places, int radix) {
  const Int scale = ipow(radix, places);
  Int a = floor_div(lo * Rat(scale));
  Int b = floor_div(hi * Rat(scale)) + 1;
  auto at = [&](const Int& n) { return eval(coeffs, Rat(n, scale)); };
  if (at(a) > 0) throw std::logic_error("oracle: bad lower end");
  while (at(b) <= 0) b += scale;
  while (b - a > 1) {
    Int m = (a + b) / 2;
    if (at(m) <= 0) a = m; else b = m;
  }
  return a;
}

struct Digits {
  bool negative = false;
  Int integer;
  std::vector<int> frac;
  bool operator==(const Digits&) const = default;
};

// |r| truncated to `places` fractional digits, by repeated multiplication.
inline Digits expand(const Rat& r, int places, int radix) {
  Digits d;
  d.negative = r < 0;
  Rat m = r < 0 ? Rat(-r) : r;
  d.integer = floor_div(m);
  Rat rest = m - Rat(d.integer);
  for (int i = 0; i < places; ++i) {
    rest *= radix;
    Int digit = floor_div(rest);
    d.frac.push_back(digit.convert_to<int>());
    rest -= Rat(digit);
  }
  return d;
}

inline Digits scaled_digits(const Int& n, int places, int radix) {
  return expand(Rat(n, ipow(radix, places)), places, radix);
}

// Splits "I;d1,d2,..." into digits without validation beyond what the tests need.
inline Digits parse_compact(const std::string& text) {
  Digits d;
  std::string s = text;
  if (!s.empty() && s[0] == '-') {
    d.negative = true;
    s.erase(0, 1);
  }
  auto semi = s.find(';');
  d.integer = Int(s.substr(0, semi));
  if (semi != std::string::npos) {
    std::string rest = s.substr(semi + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      d.frac.push_back(std::stoi(rest.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  }
  return d;
}

inline Rat value(const Digits& d, int radix) {
  Rat v = Rat(d.integer);
  Rat scale = 1;
  for (int digit : d.frac) {
    scale /= radix;
    v += scale * digit;
  }
  return d.negative ? Rat(-v) : v;
}

// Decimal string of r with `n` decimals, rounded half away from zero, by
// long division.
inline std::string decimal(const Rat& r, int n) {
  Rat m = r < 0 ? Rat(-r) : r;
  Rat scaled = m * Rat(ipow(10, n)) + frac(1, 2);
  std::string digits = floor_div(scaled).str();
  while (static_cast<int>(digits.size()) <= n) digits.insert(digits.begin(), '0');
  std::string out = r < 0 ? "-" : "";
  out += digits.substr(0, digits.size() - n);
  if (n > 0) out += "." + digits.substr(digits.size() - n);
  return out;
}

// Random rational with numerator in [-max_num, max_num], denominator in [1, max_den].
inline Rat random_rational(std::mt19937_64& rng, long long max_num, long long max_den) {
  std::uniform_int_distribution<long long> num(-max_num, max_num);
  std::uniform_int_distribution<long long> den(1, max_den);
  return frac(num(rng), den(rng));
}

}  // namespace oracle
