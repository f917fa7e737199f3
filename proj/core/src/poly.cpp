#include "sexroot/poly.hpp"

#include "sexroot/error.hpp"

#include <algorithm>
#include <cctype>

namespace sexroot {

Poly::Poly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.push_back(rational(c));
  trim();
}

Poly Poly::x() { return Poly{0, 1}; }

Poly Poly::constant(const BigRational& c) { return Poly(std::vector<BigRational>{c}); }

BigRational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return BigRational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<BigRational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + rational(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<BigRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(c));
}

Poly operator*(const BigRational& k, const Poly& p) {
  std::vector<BigRational> c = p.coeffs_;
  for (auto& v : c) v *= k;
  return Poly(std::move(c));
}

BigRational eval(const Poly& p, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return Poly();
  std::vector<BigRational> c;
  c.reserve(p.coeffs().size() - 1);
  for (int i = 1; i <= p.degree(); ++i) c.push_back(p.coeff(i) * i);
  return Poly(std::move(c));
}

std::vector<Poly> shift(const Poly& p) {
  std::vector<Poly> out;
  Poly current = p;
  BigRational factorial = 1;
  for (int k = 0; k <= std::max(p.degree(), 0); ++k) {
    if (k > 0) {
      current = derivative(current);
      factorial *= k;
    }
    out.push_back(BigRational(BigRational(1) / factorial) * current);
  }
  return out;
}

Depressed depress(const Poly& p) {
  if (p.degree() != 3 || !p.is_monic()) {
    throw DomainError("depress needs a monic cubic, got " + to_string(p));
  }
  BigRational s = -p.coeff(2) / 3;
  // q(y) = p(y + s) = sum_k q_k(s) y^k
  std::vector<Poly> taylor = shift(p);
  std::vector<BigRational> c;
  for (const Poly& qk : taylor) c.push_back(eval(qk, s));
  return {Poly(std::move(c)), s};
}

std::string to_string(const Poly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(p.coeffs()[i]);
  }
  return out + "]";
}

std::string to_algebraic(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    BigRational c = p.coeff(i);
    if (c == 0) continue;
    bool negative = c < 0;
    BigRational m = abs_of(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = m == 1 && i > 0;
    if (!unit) {
      std::string ms = to_string(m);
      out += (den_of(m) != 1 && i > 0) ? "(" + ms + ")" : ms;
    }
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Poly parse_poly(std::string_view text) {
  std::string_view s = text;
  auto strip = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  s = strip(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ParseError("polynomial must be a bracketed coefficient list: '" + std::string(text) + "'");
  }
  s = strip(s.substr(1, s.size() - 2));
  std::vector<BigRational> coeffs;
  if (s.empty()) return Poly();
  while (true) {
    auto comma = s.find(',');
    std::string_view item = strip(s.substr(0, comma));
    if (item.size() >= 2 && item.front() == '"' && item.back() == '"') {
      item = item.substr(1, item.size() - 2);
    }
    if (item.empty()) throw ParseError("empty coefficient in '" + std::string(text) + "'");
    coeffs.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return Poly(std::move(coeffs));
}

Interval bisect_root(const Poly& p, Interval bracket, const BigRational& width) {
  if (width <= 0) throw DomainError("bisection width must be positive");
  int s_lo = sign_of(eval(p, bracket.lo));
  int s_hi = sign_of(eval(p, bracket.hi));
  if (s_lo == 0) return {bracket.lo, bracket.lo};
  if (s_hi == 0) return {bracket.hi, bracket.hi};
  if (s_lo == s_hi) {
    throw DomainError("bisection bracket [" + to_string(bracket.lo) + ", " +
                      to_string(bracket.hi) + "] has no sign change");
  }
  while (bracket.width() > width) {
    BigRational mid = (bracket.lo + bracket.hi) / 2;
    int s_mid = sign_of(eval(p, mid));
    if (s_mid == 0) return {mid, mid};
    if (s_mid == s_lo) {
      bracket.lo = mid;
    } else {
      bracket.hi = mid;
    }
  }
  return bracket;
}

SexNum truncated_root(const Poly& p, const BigRational& lo, const BigRational& hi, int places,
                      int radix) {
  if (!(eval(p, lo) <= 0 && eval(p, hi) > 0)) {
    throw DomainError("no increasing sign change of " + to_string(p) + " in [" + to_string(lo) +
                      ", " + to_string(hi) + "]");
  }
  BigRational unit = radix_pow(radix, -places);
  // Grid indices: p(lo_n * unit) <= 0 < p(hi_n * unit).
  BigInt lo_n = floor_of(lo / unit);
  BigInt hi_n = ceil_of(hi / unit);
  if (eval(p, BigRational(lo_n) * unit) > 0) {
    throw DomainError("root lies below the first grid point");
  }
  while (hi_n - lo_n > 1) {
    BigInt mid = (lo_n + hi_n) / 2;
    if (eval(p, BigRational(mid) * unit) <= 0) {
      lo_n = mid;
    } else {
      hi_n = mid;
    }
  }
  return from_rational(BigRational(lo_n) * unit, places, RoundingMode::TruncateTowardZero, radix);
}

namespace {

// Enclosure of the real cube root of v > 0.
Interval cube_root_enclosure(const BigRational& v, const BigRational& width) {
  Poly cube(std::vector<BigRational>{BigRational(-v), 0, 0, 1});
  BigRational hi = v > 1 ? v : BigRational(1);
  return bisect_root(cube, {0, hi}, width);
}

Interval cardano_enclosure(const BigRational& target) {
  const BigRational b = rational(352, 27);
  const BigRational shift = rational(2, 3);
  const Poly square{-3930, 0, 1};

  BigRational eps = target / 64;
  for (;;) {
    Interval s = bisect_root(square, {62, 63}, eps);
    Interval a{2 * s.lo / 9, 2 * s.hi / 9};
    BigRational u_lo = a.lo + b;
    BigRational u_hi = a.hi + b;
    BigRational v_lo = a.lo - b;
    BigRational v_hi = a.hi - b;
    if (v_lo <= 0) {
      eps /= 16;
      continue;
    }
    BigRational u_lo_root = cube_root_enclosure(u_lo, eps).lo;
    BigRational u_hi_root = cube_root_enclosure(u_hi, eps).hi;
    BigRational v_lo_root = cube_root_enclosure(v_lo, eps).lo;
    BigRational v_hi_root = cube_root_enclosure(v_hi, eps).hi;
    Interval result{u_lo_root - v_hi_root - shift, u_hi_root - v_lo_root - shift};
    if (result.width() <= target) return result;
    eps /= 16;
  }
}

void check_cardano_places(int places) {
  if (places < 0 || places > 40) {
    throw DomainError("cardano_reference supports 0..40 places");
  }
}

}  // namespace

Interval cardano_interval(int places, int radix) {
  check_cardano_places(places);
  return cardano_enclosure(radix_pow(radix, -(places + 2)));
}

SexNum cardano_reference(int places, int radix) {
  check_cardano_places(places);
  for (int extra = 2;; extra += 2) {
    Interval enclosure = cardano_enclosure(radix_pow(radix, -(places + extra)));
    SexNum lo = from_rational(enclosure.lo, places, RoundingMode::TruncateTowardZero, radix);
    SexNum hi = from_rational(enclosure.hi, places, RoundingMode::TruncateTowardZero, radix);
    // The root is irrational, so a narrow enough enclosure never straddles a grid point.
    if (lo == hi) return lo;
  }
}

namespace cubics {

Poly fibonacci() { return Poly{-20, 10, 2, 1}; }

Poly fibonacci_depressed() {
  return Poly(std::vector<BigRational>{rational(-704, 27), rational(26, 3), 0, 1});
}

Poly viete_example() { return Poly{-14356197, 30, 0, 1}; }

Poly albiruni() { return Poly{-1, -3, 0, 1}; }

}  // namespace cubics

}  // namespace sexroot
