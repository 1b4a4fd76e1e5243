#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "wrt/backend.hpp"
#include "wrt/modgroup.hpp"
#include "wrt/numtheory.hpp"
#include "wrt/tqftrep.hpp"

namespace wrt {

struct LensSpace {
  long long p = 1;
  long long q = 0;
  bool canonical = true;  // 0 < -q < p, or (p, q) = (1, 0)
};

// Shift q by multiples of p into 0 < -q < p; p = 1 maps to (1, 0).
LensSpace normalize_lens(long long p, long long q);

struct InvariantResult {
  long long p = 1, q = 0, r = 5;
  std::vector<long long> cf;
  long long phi = 0;
  long long weight = 0;
  std::string method;  // "oracle" or "closed"
  std::complex<double> numeric;
  std::optional<CyclotomicNumber> exact;

  std::string to_json() const;
};

namespace detail {

struct LensContext {
  ContinuedFraction cf;
  SL2Matrix u;
  long long phi;
  long long weight;
};

inline LensContext lens_context(const LensSpace& ls) {
  auto [cf, u] = cf_for_lens(ls.p, ls.q);
  Rational phi = rademacher_phi(u);
  if (denominator(phi) != 1)
    throw std::logic_error("phi not integral on a lens gluing matrix");
  LinkingData link = linking_data(cf);
  return {cf, u, to_ll(numerator(phi)), link.weight};
}

template <class B>
InvariantResult finish(const LensSpace& ls, long long r,
                       const LensContext& ctx, const char* method,
                       const typename B::Value& value) {
  InvariantResult out;
  out.p = ls.p;
  out.q = ls.q;
  out.r = r;
  out.cf = ctx.cf.entries();
  out.phi = ctx.phi;
  out.weight = ctx.weight;
  out.method = method;
  out.numeric = to_complex(value);
  if constexpr (B::kExact) out.exact = value;
  return out;
}

}  // namespace detail

// kappa^phi as a backend value: kappa = i zeta_{2r}^{-1} = e((r-2)/(4r)).
template <class B>
typename B::Value kappa_power(long long r, long long phi) {
  return B::e(Rational(phi * (r - 2), 4 * r));
}

// <L(p,q), 0>_r by the matrix-product path: kappa^{Phi(U)} R(U)_{11}.
template <class B>
InvariantResult wrt_oracle(long long p, long long q, long long r) {
  validate_level(r);
  LensSpace ls = normalize_lens(p, q);
  detail::LensContext ctx = detail::lens_context(ls);
  RepMatrix<B> rep = rep_bruteforce<B>(r, ctx.cf);
  typename B::Value value = kappa_power<B>(r, ctx.phi) * rep.at(1, 1);
  return detail::finish<B>(ls, r, ctx, "oracle", value);
}

// <L(p,q), 0>_r by the closed path: the Dedekind-sum framing phase
//   i^Phi e_{2r}(12 s(q,p)) e_{2rp}(-(d+q))
// times the closed Gauss-sum form of R(U)_{11}. The phase equals
// kappa^{Phi(U)} via Phi = (d+q)/p - 12 s(d,p) and s(d,p) = s(q,p),
// so all q-dependence enters through p-term sums and s(q,p).
// p = 1 is routed to the matrix path (the expansion degenerates).
template <class B>
InvariantResult wrt_closed(long long p, long long q, long long r) {
  validate_level(r);
  LensSpace ls = normalize_lens(p, q);
  if (ls.p == 1) {
    InvariantResult out = wrt_oracle<B>(ls.p, ls.q, r);
    out.method = "closed";
    return out;
  }
  detail::LensContext ctx = detail::lens_context(ls);
  Rational s_qp = dedekind_sum(ls.q, ls.p);
  typename B::Value framing =
      B::i_pow(ctx.phi) * B::e(Rational(12) * s_qp / Rational(2 * r)) *
      B::e(Rational(-(ctx.u.d + ls.q), 2 * r * ls.p));
  const auto& ms = ctx.cf.entries();
  ContinuedFraction prefix(std::vector<long long>(ms.begin(), ms.end() - 1));
  typename B::Value value = framing * ImClosed<B>(r, prefix).eval(1, 1);
  return detail::finish<B>(ls, r, ctx, "closed", value);
}

struct VerifyRow {
  long long r = 5, p = 1, q = 0;
  long long phi = 0;
  std::complex<double> value;
  double deviation = 0.0;       // |closed - oracle|
  bool phi_ok = true;           // three-way integer Phi agreement
  double homeo_deviation = 0.0; // |v(q) - v(q*)| for q q* = 1 (mod p)
  bool exact_equal = true;      // canonical equality (exact backend runs)
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  long long lens_count = 0;
  double max_deviation = 0.0;
  double max_homeo_deviation = 0.0;
  bool all_phi_ok = true;
  bool all_exact_equal = true;
  bool pass = false;
  bool exact = false;
  double tolerance = 1e-9;

  std::string summary() const;
  std::string to_json() const;
  std::string to_csv() const;
};

enum class BackendKind { kNumeric, kExact };

// Runs both evaluation paths over every coprime (p, q), 2 <= p <= p_max,
// 0 < -q < p, for each level in r_list; records cross-path deviations,
// Phi cross-checks and homeomorphism-invariance checks.
VerifyReport verify_grid(long long p_max, const std::vector<long long>& r_list,
                         BackendKind backend, double tolerance = 1e-9);

}  // namespace wrt
