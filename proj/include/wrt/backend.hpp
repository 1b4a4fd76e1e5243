#pragma once

#include <cmath>
#include <complex>

#include "wrt/cyclo.hpp"
#include "wrt/rational.hpp"

namespace wrt {

// Floating-point value backend. e() reduces the rational argument mod 1
// exactly before converting, so arguments with large numerators stay accurate.
struct NumericBackend {
  using Value = std::complex<double>;
  static constexpr bool kExact = false;

  static Value zero() { return {0.0, 0.0}; }
  static Value one() { return {1.0, 0.0}; }
  static Value from_rational(const Rational& r) {
    return {r.convert_to<double>(), 0.0};
  }
  static Value e(const Rational& alpha) {
    Rational m = frac_mod_one(alpha);
    double a = m.convert_to<double>();
    return std::polar(1.0, 8.0 * std::atan(1.0) * a);
  }
  static Value i_pow(long long k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  static Value sqrt_n(long long n) { return {std::sqrt(double(n)), 0.0}; }
  static Value scale(const Value& v, const Rational& s) {
    return v * s.convert_to<double>();
  }
  static Value conj_of(const Value& v) { return std::conj(v); }
};

// Exact cyclotomic value backend.
struct ExactBackend {
  using Value = CyclotomicNumber;
  static constexpr bool kExact = true;

  static Value zero() { return CyclotomicNumber(); }
  static Value one() { return CyclotomicNumber(Rational(1)); }
  static Value from_rational(const Rational& r) { return CyclotomicNumber(r); }
  static Value e(const Rational& alpha) { return e_of(alpha); }
  static Value i_pow(long long k) { return e_frac(((k % 4) + 4) % 4, 4); }
  static Value sqrt_n(long long n) {
    return sqrt_exact(static_cast<unsigned long long>(n));
  }
  static Value scale(const Value& v, const Rational& s) { return v * s; }
  static Value conj_of(const Value& v) { return v.conj(); }
};

inline std::complex<double> to_complex(const std::complex<double>& v) {
  return v;
}
inline std::complex<double> to_complex(const CyclotomicNumber& v) {
  ComplexApprox a = embed(v);
  return a.value();
}

}  // namespace wrt
