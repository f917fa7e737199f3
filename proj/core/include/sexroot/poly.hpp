#pragma once

#include "sexroot/rational.hpp"
#include "sexroot/sexnum.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sexroot {

/// Univariate polynomial with exact rational coefficients, constant term
/// first. The zero polynomial has an empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRational> coeffs);
  Poly(std::initializer_list<long long> coeffs);

  static Poly x();
  static Poly constant(const BigRational& c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  BigRational coeff(int i) const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  friend bool operator==(const Poly&, const Poly&) = default;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const BigRational& k, const Poly& p);

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Horner's scheme, highest coefficient first.
BigRational eval(const Poly& p, const BigRational& x);

Poly derivative(const Poly& p);

/// Taylor coefficients of p(x+h) in h: result[k] = p^(k)(x)/k!, as
/// polynomials in x, so p(x+h) = sum_k result[k](x) h^k.
std::vector<Poly> shift(const Poly& p);

struct Depressed {
  Poly poly;          // q(y) = p(y + shift), no quadratic term
  BigRational shift;  // -a2/3; roots satisfy p_root = q_root + shift
};

/// Removes the quadratic term of a monic cubic. Throws DomainError otherwise.
Depressed depress(const Poly& p);

/// "[-20, 10, 2, 1]"
std::string to_string(const Poly& p);
/// Human form, "x^3 + 2x^2 + 10x - 20".
std::string to_algebraic(const Poly& p);
/// Parses a bracketed coefficient list of exact fractions, constant first.
Poly parse_poly(std::string_view text);

struct Interval {
  BigRational lo;
  BigRational hi;
  BigRational width() const { return hi - lo; }
};

/// Bisects [lo, hi] (p(lo) and p(hi) of opposite sign or zero) until the
/// bracket is no wider than `width`. Midpoints are taken exactly.
Interval bisect_root(const Poly& p, Interval bracket, const BigRational& width);

/// Largest grid point g = n·radix^-places in [lo, hi] with p(g) <= 0, for p
/// increasing across [lo, hi] with p(lo) <= 0 < p(hi): the root truncated to
/// `places` digits.
SexNum truncated_root(const Poly& p, const BigRational& lo, const BigRational& hi, int places,
                      int radix = kDefaultRadix);

/// Real root of x^3+2x^2+10x-20 from Cardano's radical expression
///   cbrt(a+b) - cbrt(a-b) - 2/3,  a = 2 sqrt(3930)/9, b = 352/27,
/// with every radical enclosed in exact rational intervals. Truncated to
/// `places` digits (places <= 40).
SexNum cardano_reference(int places, int radix = kDefaultRadix);

/// The enclosing interval cardano_reference settles on, no wider than
/// radix^-(places+2).
Interval cardano_interval(int places, int radix = kDefaultRadix);

namespace cubics {

/// x^3 + 2x^2 + 10x - 20
Poly fibonacci();
/// x^3 + (26/3)x - 704/27
Poly fibonacci_depressed();
/// x^3 + 30x - 14356197
Poly viete_example();
/// x^3 - 3x - 1
Poly albiruni();

}  // namespace cubics

}  // namespace sexroot
