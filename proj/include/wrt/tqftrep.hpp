#pragma once

#include <cstdlib>
#include <vector>

#include "wrt/backend.hpp"
#include "wrt/cyclo.hpp"
#include "wrt/modgroup.hpp"
#include "wrt/rational.hpp"

namespace wrt {

inline void validate_level(long long r) {
  if (r < 5 || r % 4 != 1)
    throw DomainError("level r must satisfy r = 1 (mod 4), r >= 5");
}

inline long long rep_dim(long long r) { return (r - 1) / 2; }

// Constants of the theory at level r. kappa = i A^{-1} with A = zeta_{2r}.
struct TheoryParams {
  long long r;
  long long dim;
  CyclotomicNumber A;
  CyclotomicNumber kappa;
  CyclotomicNumber zeta;

  explicit TheoryParams(long long level)
      : r(level),
        dim((level - 1) / 2),
        A(e_frac(1, 2 * level)),
        kappa(e_frac(level - 2, 4 * level)),
        zeta(e_frac(1, 8)) {
    validate_level(level);
  }
};

template <class B>
struct RepMatrix {
  long long r = 5;
  long long dim = 2;
  std::vector<typename B::Value> data;

  RepMatrix() = default;
  RepMatrix(long long level, long long n)
      : r(level), dim(n), data(n * n, B::zero()) {}

  typename B::Value& at(long long j, long long l) {
    return data[(j - 1) * dim + (l - 1)];
  }
  const typename B::Value& at(long long j, long long l) const {
    return data[(j - 1) * dim + (l - 1)];
  }
};

// S_{jl} = (1/(i sqrt r)) (e_r(jl) - e_r(-jl)), defined for all integer
// indices. Extended-index symmetries: S_{j, l+r} = S_{jl}, S_{j, r-l} = -S_{jl}.
template <class B>
typename B::Value s_entry(long long r, long long j, long long l) {
  typename B::Value diff =
      B::e(Rational(j * l, r)) - B::e(Rational(-j * l, r));
  return B::i_pow(3) * B::scale(B::sqrt_n(r), Rational(1, r)) * diff;
}

// Diagonal T entry and its integer powers. The entry is a function of the
// index mod r, which is what makes the extended-index symmetries
// T_j = T_{j+r} = T_{r-j} hold exactly; equivalently
// T_j = i (-1)^{j+1} e_{2r}(j^2).
template <class B>
typename B::Value t_entry_pow(long long r, long long j, long long m) {
  return B::i_pow(-m) * B::e(Rational(m * (1 - r) * j * j, 2 * r));
}

template <class B>
typename B::Value t_entry(long long r, long long j) {
  return t_entry_pow<B>(r, j, 1);
}

template <class B>
RepMatrix<B> rep_generator_s(long long r) {
  validate_level(r);
  RepMatrix<B> s(r, rep_dim(r));
  for (long long j = 1; j <= s.dim; ++j)
    for (long long l = 1; l <= s.dim; ++l) s.at(j, l) = s_entry<B>(r, j, l);
  return s;
}

template <class B>
RepMatrix<B> rep_generator_t(long long r) {
  validate_level(r);
  RepMatrix<B> t(r, rep_dim(r));
  for (long long j = 1; j <= t.dim; ++j) t.at(j, j) = t_entry<B>(r, j);
  return t;
}

template <class B>
RepMatrix<B> matmul(const RepMatrix<B>& x, const RepMatrix<B>& y) {
  RepMatrix<B> out(x.r, x.dim);
  for (long long i = 1; i <= x.dim; ++i) {
    for (long long k = 1; k <= x.dim; ++k) {
      typename B::Value acc = B::zero();
      for (long long j = 1; j <= x.dim; ++j) acc += x.at(i, j) * y.at(j, k);
      out.at(i, k) = acc;
    }
  }
  return out;
}

// Literal product T^{m_t} S T^{m_{t-1}} ... T^{m_1} S, rightmost factor first.
// This is the oracle every closed form is checked against.
template <class B>
RepMatrix<B> rep_bruteforce(long long r, const ContinuedFraction& cf) {
  validate_level(r);
  const long long n = rep_dim(r);
  RepMatrix<B> s = rep_generator_s<B>(r);
  RepMatrix<B> m;
  bool first = true;
  for (long long mi : cf.entries()) {
    m = first ? s : matmul(s, m);
    first = false;
    for (long long j = 1; j <= n; ++j) {
      typename B::Value tj = t_entry_pow<B>(r, j, mi);
      for (long long l = 1; l <= n; ++l) m.at(j, l) = tj * m.at(j, l);
    }
  }
  return m;
}

enum class ImMode { kDirect, kClosed };

// Closed Gauss-sum evaluator for
//   Im_t(J, y) = sum_{j_1..j_t} S_{J j_t} T^{m_t}_{j_t} ... T^{m_1}_{j_1} S_{j_1 y},
// i.e. the entries of S T^{m_t} S ... T^{m_1} S. Built once per (r, word);
// evaluation per entry costs O(|a_t|) exponential terms.
//
// Shape: two branches sigma = +-1, each
//   coef * e(u y^2 + v y + w) *
//   sum_{beta mod |a_t|} sum_{sJ = +-1} sJ *
//       e( -(2 c_t (r beta + sJ J) + 2 sigma y + H)^2 / (8 r a_t c_t) ),
// where H is an integer half-shift tracking the index parity through the
// reciprocity steps. Requires every partial a_i to be nonzero.
template <class B>
class ImClosed {
 public:
  ImClosed(long long r, const ContinuedFraction& cf) : r_(r) {
    validate_level(r);
    const auto& ms = cf.entries();
    const long long t = cf.length();
    const auto& cv = cf.convergents();
    for (long long i = 1; i <= t; ++i) {
      if (cv[i].a == 0)
        throw DegenerateConvergentError(
            "closed form undefined: vanishing partial convergent");
    }
    a_t_ = cv[t].a;
    c_t_ = cv[t].c;

    const long long m1 = ms[0];
    // C1 = -(-i)^{m1} sqrt(i r / m1) / (2 r), with
    // sqrt(i r / m) = zeta^{sign(m)} sqrt(r |m|) / |m|.
    typename B::Value coef =
        B::i_pow(2 - m1) * B::e(Rational(sgn(m1), 8)) *
        B::scale(B::sqrt_n(r * std::llabs(m1)),
                 Rational(1, 2 * r * std::llabs(m1)));
    Branch plus{coef, +1, r * m1, Rational(0), Rational(0), Rational(0)};
    Branch minus{-coef, -1, r * m1, Rational(0), Rational(0), Rational(0)};
    branches_ = {plus, minus};

    for (long long s = 1; s < t; ++s) {
      const long long m = ms[s];
      const long long as = cv[s].a, cs = cv[s].c, an = cv[s + 1].a;
      // K = (1/(i sqrt r)) (-i)^m sqrt(i r a_s / a_{s+1})
      //   = i^{3-m} zeta^{sign(a_s a_{s+1})} sqrt(|a_s a_{s+1}|) / |a_{s+1}|.
      typename B::Value k =
          B::i_pow(3 - m) * B::e(Rational(sgn(as * an), 8)) *
          B::scale(B::sqrt_n(std::llabs(as * an)),
                   Rational(1, std::llabs(an)));
      for (Branch& br : branches_) {
        if ((m * r * as - br.H + an * r * std::llabs(as)) % 2 != 0)
          throw std::logic_error("half-shift parity violated");
        const Rational den(2 * r * as * cs);
        br.u += Rational(-1) / den;
        br.v += Rational(-br.sigma * br.H) / den;
        br.w += Rational(-br.H) * Rational(br.H) / (Rational(4) * den);
        br.coef = br.coef * k;
        br.sigma = -br.sigma;
        br.H = m * r * as - br.H;
      }
    }
  }

  typename B::Value eval(long long j_out, long long j_in) const {
    typename B::Value total = B::zero();
    for (const Branch& br : branches_) {
      Rational y(j_in);
      typename B::Value phase = B::e(br.u * y * y + br.v * y + br.w);
      typename B::Value gauss = B::zero();
      for (long long beta = 0; beta < std::llabs(a_t_); ++beta) {
        for (int sj : {+1, -1}) {
          BigInt inner = BigInt(2 * c_t_) * (r_ * beta + sj * j_out) +
                         BigInt(2 * br.sigma * j_in) + br.H;
          Rational q = Rational(-inner * inner) /
                       Rational(BigInt(8) * r_ * a_t_ * c_t_);
          typename B::Value term = B::e(q);
          gauss += (sj > 0) ? term : -term;
        }
      }
      total += br.coef * phase * gauss;
    }
    return total;
  }

 private:
  static long long sgn(long long x) { return (x > 0) - (x < 0); }

  struct Branch {
    typename B::Value coef;
    int sigma;
    long long H;  // 2 h, the accumulated half-shift
    Rational u, v, w;
  };

  long long r_;
  long long a_t_ = 1, c_t_ = 0;
  std::vector<Branch> branches_;
};

namespace detail {
// Literal nested sum over j_1..j_t in [1, (r-1)/2].
template <class B>
typename B::Value im_direct_rec(long long r, const std::vector<long long>& ms,
                                long long level, long long j_upper,
                                long long j_in) {
  const long long n = rep_dim(r);
  typename B::Value acc = B::zero();
  for (long long j = 1; j <= n; ++j) {
    typename B::Value factor =
        s_entry<B>(r, j_upper, j) * t_entry_pow<B>(r, j, ms[level]);
    if (level == 0) {
      acc += factor * s_entry<B>(r, j, j_in);
    } else {
      acc += factor * im_direct_rec<B>(r, ms, level - 1, j, j_in);
    }
  }
  return acc;
}
}  // namespace detail

// Entry of S T^{m_t} S ... T^{m_1} S by either the literal nested sum or the
// closed Gauss-sum form. Closed mode requires nonvanishing partial
// convergents.
template <class B>
typename B::Value im_sum(long long r, const ContinuedFraction& cf,
                         long long j_out, long long j_in, ImMode mode) {
  validate_level(r);
  if (mode == ImMode::kDirect) {
    return detail::im_direct_rec<B>(r, cf.entries(), cf.length() - 1, j_out,
                                    j_in);
  }
  return ImClosed<B>(r, cf).eval(j_out, j_in);
}

// Closed form for the entry R(U)_{jl} of T^{m_t} S ... T^{m_1} S:
// the final diagonal factor times the closed Im of the prefix word.
// Requires the lower-left entry of U to be nonzero.
template <class B>
typename B::Value rep_closed_entry(long long r, const ContinuedFraction& cf,
                                   long long j, long long l) {
  validate_level(r);
  SL2Matrix u = cf_to_matrix(cf);
  if (u.c == 0)
    throw DomainError(
        "rep_closed_entry: c = 0 words have no Gauss-sum form; use the "
        "matrix product");
  const auto& ms = cf.entries();
  const long long t = cf.length();
  typename B::Value tfac = t_entry_pow<B>(r, j, ms[t - 1]);
  if (t == 1) return tfac * s_entry<B>(r, j, l);
  ContinuedFraction prefix(
      std::vector<long long>(ms.begin(), ms.end() - 1));
  return tfac * ImClosed<B>(r, prefix).eval(j, l);
}

}  // namespace wrt
