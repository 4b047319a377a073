#pragma once

#include <stdexcept>
#include <string>

namespace perfiso {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPrime : public Error {
 public:
  explicit InvalidPrime(long long p)
      : Error("p must be prime (got " + std::to_string(p) + ")"), value(p) {}
  long long value;
};

class PrimeMismatch : public Error {
 public:
  PrimeMismatch(int lhs, int rhs)
      : Error("operands live over different primes (" + std::to_string(lhs) +
              " vs " + std::to_string(rhs) + ")") {}
};

/// Raised instead of silently wrapping a 64-bit coefficient.
class CoefficientOverflow : public Error {
 public:
  CoefficientOverflow() : Error("cyclotomic coefficient overflowed int64") {}
};

class NonIntegralInnerProduct : public Error {
 public:
  NonIntegralInnerProduct()
      : Error("inner product sum is not divisible by p in O") {}
};

/// A p-division in I_mu / R_mu failed; `point` is the first failing
/// evaluation index.
class NonIntegral : public Error {
 public:
  explicit NonIntegral(int at)
      : Error("value at g^" + std::to_string(at) + " is not O-integral"),
        point(at) {}
  int point;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotPerfect : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace perfiso
