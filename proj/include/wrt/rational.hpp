#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace wrt {

using BigInt = boost::multiprecision::cpp_int;
// Always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Raised when an operation's arguments violate its stated domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised by closed-form evaluation when a partial convergent vanishes.
class DegenerateConvergentError : public DomainError {
 public:
  using DomainError::DomainError;
};

// num/den with either sign of den (the two-argument Rational constructor
// rejects negative denominators).
inline Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("ratio: zero denominator");
  return Rational(num) / Rational(den);
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

// x - floor(x), in [0, 1).
inline Rational frac_mod_one(const Rational& x) {
  BigInt fl = floor_div(numerator(x), denominator(x));
  return x - Rational(fl);
}

inline long long to_ll(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("BigInt out of long long range");
  }
  return static_cast<long long>(v);
}

}  // namespace wrt
