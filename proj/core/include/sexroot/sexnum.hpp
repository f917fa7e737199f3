#pragma once

/// Positional fixed-point numbers in an arbitrary radix (60 by default).
///
/// A SexNum is sign, integer digits and fractional digits, all in the same
/// radix. The value is always exactly representable as a BigRational, so
/// every rounding decision is made on exact values and can be replayed.
///
/// Text forms:
///   compact    1;22,7,42,33,4,40     (integer part as a decimal number)
///   classical  1°22'7''42'''33^IV4^V40^VI

#include "sexroot/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sexroot {

inline constexpr int kDefaultRadix = 60;

enum class RoundingMode {
  TruncateTowardZero,
  AwayFromZero,
  NearestHalfAwayFromZero,
};

enum class NumberStyle { Compact, Classical };

enum class ArithOp { Add, Subtract, Multiply, Divide };

class SexNum {
 public:
  /// Zero in radix 60 with no fractional digits.
  SexNum() = default;

  /// Validates digits against the radix and strips leading integer zeros.
  /// A zero value always gets sign +1.
  static SexNum from_digits(int sign, std::vector<int> int_digits,
                            std::vector<int> frac_digits, int radix = kDefaultRadix);

  int sign() const { return sign_; }
  int radix() const { return radix_; }
  const std::vector<int>& int_digits() const { return int_digits_; }
  const std::vector<int>& frac_digits() const { return frac_digits_; }
  int frac_places() const { return static_cast<int>(frac_digits_.size()); }
  bool is_zero() const;

  /// Integer part magnitude.
  BigInt integer_part() const;

  /// Structural equality: same radix, sign and digit lists (trailing
  /// fractional zeros are significant).
  friend bool operator==(const SexNum&, const SexNum&) = default;

 private:
  int sign_ = 1;
  int radix_ = kDefaultRadix;
  std::vector<int> int_digits_{0};
  std::vector<int> frac_digits_;
};

/// Rounds `r` on its magnitude to `frac_places` digits and reattaches the sign.
SexNum from_rational(const BigRational& r, int frac_places, RoundingMode mode,
                     int radix = kDefaultRadix);

BigRational to_rational(const SexNum& s);

/// The exact rational that from_rational would encode.
BigRational round_rational(const BigRational& r, int frac_places, RoundingMode mode,
                           int radix = kDefaultRadix);

/// Parses either text form. Throws ParseError.
SexNum parse_sexnum(std::string_view text, int radix = kDefaultRadix);

std::string format(const SexNum& s, NumberStyle style = NumberStyle::Compact);

/// Drops fractional digits beyond `frac_places` under `mode`. Never pads.
SexNum round_to(const SexNum& s, int frac_places, RoundingMode mode);

/// Exact `a op b`, then rounded to `frac_places`. Throws DomainError on
/// division by zero or mixed radices.
SexNum fixed_arith(const SexNum& a, const SexNum& b, ArithOp op, int frac_places,
                   RoundingMode mode);

/// Superscript marker for a fractional position: ' '' ''' then ^IV, ^V, ...
std::string place_marker(int position);
std::string to_roman(int n);

std::string to_string(RoundingMode mode);
RoundingMode parse_rounding_mode(std::string_view text);

std::ostream& operator<<(std::ostream& os, const SexNum& s);

}  // namespace sexroot
