#pragma once

#include <complex>
#include <string>
#include <vector>

#include "wrt/rational.hpp"

namespace wrt {

struct ComplexApprox {
  double re = 0.0;
  double im = 0.0;
  double tolerance = 1e-9;

  std::complex<double> value() const { return {re, im}; }
};

// An element of the cyclotomic field Q(zeta_N), stored as the canonical
// coefficient vector of length phi(N) modulo the N-th cyclotomic polynomial.
// Two values are equal iff their coefficient vectors agree after promotion to
// the least common conductor. The representation of a rational is always the
// constant coefficient vector, so rationals reduce to conductor 1.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : conductor_(1), coeffs_(1, Rational(0)) {}
  explicit CyclotomicNumber(const Rational& r)
      : conductor_(1), coeffs_(1, r) {}
  explicit CyclotomicNumber(long long n)
      : conductor_(1), coeffs_(1, Rational(n)) {}

  // zeta_n^a with n != 0; negative n means e(a/n) read with a signed
  // denominator. The result is stored at the reduced conductor.
  static CyclotomicNumber root_of_unity(const BigInt& a, const BigInt& n);

  // Builds sum coeffs[k] * zeta_n^k (exponents arbitrary, folded mod n).
  static CyclotomicNumber from_terms(
      long long n, const std::vector<std::pair<BigInt, Rational>>& terms);

  long long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const;  // requires is_rational()

  CyclotomicNumber conj() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const Rational& s);

  friend CyclotomicNumber operator+(CyclotomicNumber a,
                                    const CyclotomicNumber& b) {
    a += b;
    return a;
  }
  friend CyclotomicNumber operator-(CyclotomicNumber a,
                                    const CyclotomicNumber& b) {
    a -= b;
    return a;
  }
  friend CyclotomicNumber operator*(CyclotomicNumber a,
                                    const CyclotomicNumber& b) {
    a *= b;
    return a;
  }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) {
    a *= s;
    return a;
  }

  bool operator==(const CyclotomicNumber& o) const;
  bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

  std::string to_json() const;

 private:
  CyclotomicNumber(long long conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  // Collapses to conductor 1 when only the constant coefficient survives.
  void compress();
  CyclotomicNumber promoted(long long target) const;

  long long conductor_;
  std::vector<Rational> coeffs_;
};

// e(a/n) = exp(2 pi i a / n); n != 0 (signed denominators allowed).
CyclotomicNumber e_frac(long long a, long long n);
CyclotomicNumber e_frac(const BigInt& a, const BigInt& n);
// e(alpha) for rational alpha.
CyclotomicNumber e_of(const Rational& alpha);

// The positive real square root of n >= 1 as an exact cyclotomic number.
CyclotomicNumber sqrt_exact(unsigned long long n);

ComplexApprox embed(const CyclotomicNumber& x, double tolerance = 1e-9);

long long euler_phi(long long n);
// Coefficients of the N-th cyclotomic polynomial, degree phi(N), monic.
const std::vector<BigInt>& cyclotomic_polynomial(long long n);

}  // namespace wrt
