#include "wrt/numtheory.hpp"

#include <cmath>
#include <cstdlib>

#include "wrt/backend.hpp"

namespace wrt {

Rational sawtooth(const Rational& x) {
  if (denominator(x) == 1) return Rational(0);
  return frac_mod_one(x) - Rational(1, 2);
}

Rational dedekind_sum(long long q, long long p) {
  if (p < 1) throw DomainError("dedekind_sum: p must be positive");
  Rational s(0);
  for (long long k = 1; k < p; ++k) {
    s += sawtooth(Rational(k, p)) * sawtooth(Rational(k * q, p));
  }
  Rational check = s * Rational(6 * p);
  if (denominator(check) != 1)
    throw std::logic_error("dedekind_sum: 6p s(q,p) not integral");
  return s;
}

Rational rademacher_phi(const SL2Matrix& u) {
  if (u.c == 0) throw DomainError("rademacher_phi: c must be nonzero");
  if (u.det() != 1) throw DomainError("rademacher_phi: determinant != 1");
  long long sgn = u.c > 0 ? 1 : -1;
  return ratio(u.a + u.d, u.c) -
         Rational(12 * sgn) * dedekind_sum(u.d, std::llabs(u.c));
}

long long rademacher_phi_cf(const ContinuedFraction& cf) {
  const auto& ms = cf.entries();
  if (ms.back() != 0)
    throw DomainError("rademacher_phi_cf: expected trailing zero entry");
  long long t = cf.length();
  long long sum = 0;
  for (long long i = 0; i + 1 < t; ++i) sum += ms[i];
  return -3 * (t - 1) + sum;
}

std::pair<std::complex<double>, std::complex<double>> gauss_reciprocity(
    const ReciprocityInstance& inst) {
  const long long n = inst.n, m = inst.m;
  if (n < 1 || m < 1) throw DomainError("gauss_reciprocity: need n, m >= 1");
  if ((n * m) % 2 != 0) throw DomainError("gauss_reciprocity: nm must be even");
  Rational npsi = Rational(n) * inst.psi;
  if (denominator(npsi) != 1)
    throw DomainError("gauss_reciprocity: n psi must be integral");

  using B = NumericBackend;
  std::complex<double> lhs = 0;
  for (long long l = 0; l < n; ++l) {
    lhs += B::e(Rational(m * l * l, 2 * n) + inst.psi * Rational(l));
  }
  std::complex<double> rhs = 0;
  for (long long l = 0; l < m; ++l) {
    Rational x = Rational(l) + inst.psi;
    rhs += B::e(Rational(-n) * x * x / Rational(2 * m));
  }
  rhs *= std::sqrt(std::complex<double>(0.0, double(n) / double(m)));
  return {lhs, rhs};
}

}  // namespace wrt
