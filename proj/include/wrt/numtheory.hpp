#pragma once

#include <complex>
#include <utility>

#include "wrt/modgroup.hpp"
#include "wrt/rational.hpp"

namespace wrt {

// Sawtooth ((x)) = x - floor(x) - 1/2 for x not an integer, 0 otherwise.
Rational sawtooth(const Rational& x);

// Dedekind sum s(q, p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)), p >= 1.
Rational dedekind_sum(long long q, long long p);

// Rademacher phi of U = (a, b; c, d) with c != 0:
//   (a + d)/c - 12 sign(c) s(d, |c|).
Rational rademacher_phi(const SL2Matrix& u);

// Chain form -3(t-1) + sum of the framings m_1..m_{t-1} for a lens
// expansion with trailing zero entry.
long long rademacher_phi_cf(const ContinuedFraction& cf);

struct ReciprocityInstance {
  long long n = 1;       // lambda modulus
  long long m = 1;       // quadratic coefficient
  Rational psi = Rational(0);  // shift, n * psi integral
};

// Both sides of the one-dimensional Gauss sum reciprocity
//   sum_{l mod n} e_{2n}(m l^2) e(psi l)
//     = sqrt(in/m) sum_{l mod m} e_{2m}(-n (l + psi)^2),
// each evaluated by direct summation.
std::pair<std::complex<double>, std::complex<double>> gauss_reciprocity(
    const ReciprocityInstance& inst);

}  // namespace wrt
