#pragma once

// Exact integer and rational types used by every module, plus the handful of
// conversions the solvers and reports need.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace sexroot {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;

// Always in lowest terms with a positive denominator; zero is 0/1.
using BigRational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline BigRational rational(long long num, long long den = 1) {
  return BigRational(BigInt(num), BigInt(den));
}

inline BigInt num_of(const BigRational& r) { return mp::numerator(r); }
inline BigInt den_of(const BigRational& r) { return mp::denominator(r); }

BigInt floor_of(const BigRational& r);
BigInt ceil_of(const BigRational& r);

// base^exp for a small base; exp >= 0.
BigInt int_pow(long long base, unsigned exp);

// radix^exp as a rational, exp of either sign.
BigRational radix_pow(int radix, int exp);

BigRational abs_of(const BigRational& r);
int sign_of(const BigRational& r);

// "n" or "n/d".
std::string to_string(const BigRational& r);

// Accepts "n", "n/d", "-n/d" and plain decimals like "1.25".
BigRational parse_rational(std::string_view text);

// Fixed decimal notation rounded half away from zero, e.g. "1.36880810785322359".
std::string to_decimal(const BigRational& r, int decimals);

// Scientific notation with `sig` significant digits, e.g. "-1.136722e-09".
// Rounds half away from zero on the exact value.
std::string to_scientific(const BigRational& r, int sig);

// Plain decimal with `sig` significant digits, e.g. "50.4" or "3.03".
std::string to_significant(const BigRational& r, int sig);

double to_double(const BigRational& r);

}  // namespace sexroot
