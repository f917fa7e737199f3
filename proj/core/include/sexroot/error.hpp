#pragma once

#include <stdexcept>
#include <string>

namespace sexroot {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (numbers, polynomials, scenario files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A violated precondition: broken bracket, zero divisor, bad radix, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace sexroot
