#include "wrt/modgroup.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace wrt {

namespace {

long long sign_of(long long x) { return (x > 0) - (x < 0); }

long long ceil_div(long long a, long long b) {  // b > 0
  return a / b + ((a % b != 0 && a > 0) ? 1 : 0);
}

long long floor_div_ll(long long a, long long b) {  // b > 0
  return a / b - ((a % b != 0 && a < 0) ? 1 : 0);
}

// Entries of the all->=2 expansion of num/den > 1, peeled top factor first.
// Returns entries in product order (m_1 first).
std::vector<long long> expand_ge2(long long num, long long den) {
  std::vector<long long> top_first;
  long long a = num, b = den;
  while (true) {
    long long m = ceil_div(a, b);
    top_first.push_back(m);
    if (m * b == a) break;
    long long a2 = b, b2 = m * b - a;
    a = a2;
    b = b2;
  }
  return {top_first.rbegin(), top_first.rend()};
}

// Mirror for values < -1: all entries <= -2.
std::vector<long long> expand_le2(long long num, long long den) {
  std::vector<long long> top_first;
  long long a = num, b = den;
  while (true) {
    long long m = floor_div_ll(a, b);
    top_first.push_back(m);
    if (m * b == a) break;
    long long a2 = b, b2 = m * b - a;
    a = a2;
    b = b2;
  }
  return {top_first.rbegin(), top_first.rend()};
}

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<long long> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("continued fraction must be nonempty");
  convergents_.reserve(entries_.size() + 1);
  convergents_.push_back(Convergent{1, 0, 0, 1});
  SL2Matrix direct{1, 0, 0, 1};
  for (long long m : entries_) {
    const Convergent& p = convergents_.back();
    Convergent nxt;
    nxt.a = m * p.a - p.c;
    nxt.b = m * p.b - p.d;
    nxt.c = p.a;
    nxt.d = p.b;
    convergents_.push_back(nxt);
    // Cross-check against direct multiplication by T^m S = (m, -1; 1, 0).
    SL2Matrix step{m, -1, 1, 0};
    direct = SL2Matrix{step.a * direct.a + step.b * direct.c,
                       step.a * direct.b + step.b * direct.d,
                       step.c * direct.a + step.d * direct.c,
                       step.c * direct.b + step.d * direct.d};
    const Convergent& q = convergents_.back();
    if (direct.a != q.a || direct.b != q.b || direct.c != q.c ||
        direct.d != q.d) {
      throw std::logic_error("convergent recurrence mismatch");
    }
  }
}

Rational ContinuedFraction::nested_value() const {
  // Evaluate m_t - 1/(m_{t-1} - ...), innermost entry m_1 last.
  Rational v(entries_.front());
  for (size_t i = 1; i < entries_.size(); ++i) {
    if (v == 0) throw DomainError("nested fraction hits division by zero");
    v = Rational(entries_[i]) - 1 / v;
  }
  return v;
}

SL2Matrix cf_to_matrix(const ContinuedFraction& cf) {
  const Convergent& last = cf.convergents().back();
  SL2Matrix m{last.a, last.b, last.c, last.d};
  if (m.det() != 1) throw std::logic_error("determinant != 1");
  return m;
}

ContinuedFraction cf_expand(long long num, long long den) {
  if (den == 0) throw DomainError("cf_expand: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (std::llabs(num) == den)
    throw DomainError("cf_expand: |value| = 1 has no normal form");
  if (num > den) return ContinuedFraction(expand_ge2(num, den));
  if (num < -den) return ContinuedFraction(expand_le2(num, den));
  if (num == 0) return ContinuedFraction({0});
  // 0 < value < 1: value = 0 - 1/x with x = -den/num < -1.
  // -1 < value < 0: value = 0 - 1/x with x = den/(-num) > 1.
  std::vector<long long> inner = (num > 0) ? expand_le2(-den, num)
                                           : expand_ge2(den, -num);
  inner.push_back(0);
  return ContinuedFraction(std::move(inner));
}

std::pair<ContinuedFraction, SL2Matrix> cf_for_lens(long long p, long long q) {
  if (p < 1) throw DomainError("cf_for_lens: p must be positive");
  if (p == 1) {
    if (q != 0) throw DomainError("cf_for_lens: p = 1 requires q = 0");
    ContinuedFraction cf({0});
    return {cf, cf_to_matrix(cf)};
  }
  if (!(0 < -q && -q < p)) throw DomainError("cf_for_lens: need 0 < -q < p");
  if (std::gcd(p, -q) != 1) throw DomainError("cf_for_lens: gcd(p, q) != 1");
  std::vector<long long> entries = expand_ge2(p, -q);  // expansion of -p/q
  entries.push_back(0);
  ContinuedFraction cf(std::move(entries));
  SL2Matrix u = cf_to_matrix(cf);
  if (u.a != q || u.c != p) throw std::logic_error("lens gluing form mismatch");
  return {cf, u};
}

LinkingData linking_data(const ContinuedFraction& cf) {
  const auto& ms = cf.entries();
  const long long t = cf.length();
  if (ms.back() != 0)
    throw DomainError("linking_data: expected a trailing zero entry");
  LinkingData out;
  out.diagonal.assign(ms.begin(), ms.end() - (t >= 1 ? 1 : 0));
  out.trace = std::accumulate(out.diagonal.begin(), out.diagonal.end(), 0LL);
  // Leading principal minors D_k of the tridiagonal matrix satisfy
  // D_k = m_k D_{k-1} - D_{k-2}, the same recurrence as the a-convergents.
  // Signature by Sturm sign changes; a zero minor always sits between
  // minors of opposite sign, so zeros are skipped.
  std::vector<long long> minors{1};
  for (const Convergent& cv :
       std::vector<Convergent>(cf.convergents().begin() + 1,
                               cf.convergents().end() - (t >= 1 ? 1 : 0))) {
    minors.push_back(cv.a);
  }
  long long changes = 0;
  long long prev = 1;
  for (size_t k = 1; k < minors.size(); ++k) {
    if (minors[k] == 0) continue;
    if (sign_of(minors[k]) != sign_of(prev)) ++changes;
    prev = minors[k];
  }
  long long n = out.size();
  out.signature = n - 2 * changes;
  long long w = 0;
  const auto& cv = cf.convergents();
  for (long long i = 2; i <= t; ++i) {
    w += sign_of(cv[i - 1].c * cv[i].c);
  }
  out.weight = w;
  return out;
}

}  // namespace wrt
