#include "wrt/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "json.hpp"

namespace wrt {

namespace {

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> fs;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fs.emplace_back(p, e);
    }
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> ds;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Exact division of polynomial a by monic polynomial b (ascending coeffs).
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> a,
                                      const std::vector<BigInt>& b) {
  const size_t db = b.size() - 1;
  if (a.size() < b.size()) return {BigInt(0)};
  std::vector<BigInt> q(a.size() - db, BigInt(0));
  for (size_t i = a.size(); i-- > db;) {
    BigInt c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

struct ConductorData {
  long long n = 1;
  long long phi = 1;
  std::vector<BigInt> cyclo;              // Phi_n, ascending, monic
  std::vector<std::vector<BigInt>> rows;  // rows[k - phi] = x^k mod Phi_n
  std::mutex rows_mutex;

  // x^k mod Phi_n for phi <= k < n, built incrementally. rows is reserved to
  // its final size up front so returned references never move.
  const std::vector<BigInt>& row(long long k) {
    std::lock_guard<std::mutex> lock(rows_mutex);
    rows.reserve(n - phi);
    while (static_cast<long long>(rows.size()) <= k - phi) {
      long long next = phi + static_cast<long long>(rows.size());
      std::vector<BigInt> r(phi, BigInt(0));
      if (next == phi) {
        for (long long j = 0; j < phi; ++j) r[j] = -cyclo[j];
      } else {
        const std::vector<BigInt>& prev = rows.back();
        BigInt lead = prev[phi - 1];
        for (long long j = phi - 1; j >= 1; --j) r[j] = prev[j - 1];
        r[0] = 0;
        if (lead != 0) {
          for (long long j = 0; j < phi; ++j) r[j] -= lead * cyclo[j];
        }
      }
      rows.push_back(std::move(r));
    }
    return rows[k - phi];
  }
};

std::map<long long, ConductorData>& conductor_cache() {
  static std::map<long long, ConductorData> cache;
  return cache;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

ConductorData& conductor_data(long long n) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = conductor_cache().find(n);
    if (it != conductor_cache().end()) return it->second;
  }
  // Compute Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d outside the lock.
  std::vector<BigInt> poly(n + 1, BigInt(0));
  poly[0] = -1;
  poly[n] = 1;
  if (n > 1) {
    for (long long d : divisors(n)) {
      if (d == n) continue;
      poly = poly_divide_exact(std::move(poly), cyclotomic_polynomial(d));
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  ConductorData& cd = conductor_cache()[n];
  if (cd.cyclo.empty()) {
    cd.n = n;
    cd.phi = static_cast<long long>(poly.size()) - 1;
    cd.cyclo = std::move(poly);
  }
  return cd;
}

// Reduces a raw exponent vector (size n, exponents 0..n-1) to the canonical
// coefficient vector of length phi(n).
std::vector<Rational> reduce_raw(long long n, std::vector<Rational> raw) {
  ConductorData& cd = conductor_data(n);
  std::vector<Rational> out(raw.begin(), raw.begin() + cd.phi);
  for (long long k = cd.phi; k < n; ++k) {
    if (raw[k] == 0) continue;
    const std::vector<BigInt>& row = cd.row(k);
    for (long long j = 0; j < cd.phi; ++j) {
      if (row[j] != 0) out[j] += raw[k] * Rational(row[j]);
    }
  }
  return out;
}

}  // namespace

long long euler_phi(long long n) {
  long long result = n;
  for (const auto& [p, e] : factorize(n)) result -= result / p;
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(long long n) {
  return conductor_data(n).cyclo;
}

CyclotomicNumber CyclotomicNumber::from_terms(
    long long n, const std::vector<std::pair<BigInt, Rational>>& terms) {
  std::vector<Rational> raw(n, Rational(0));
  for (const auto& [exp, coef] : terms) {
    BigInt e = exp % n;
    if (e < 0) e += n;
    raw[static_cast<long long>(e)] += coef;
  }
  CyclotomicNumber out(n, reduce_raw(n, std::move(raw)));
  out.compress();
  return out;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(const BigInt& a_in,
                                                 const BigInt& n_in) {
  if (n_in == 0) throw DomainError("root_of_unity: zero order");
  BigInt a = a_in, n = n_in;
  if (n < 0) {
    a = -a;
    n = -n;
  }
  a %= n;
  if (a < 0) a += n;
  BigInt g = gcd(a, n);
  a /= g;
  n /= g;
  Rational sign(1);
  // Avoid conductors congruent to 2 mod 4: zeta_{2m}^a = -zeta_m^{(a-m)/2}
  // for odd m and odd a.
  if (n % 4 == 2) {
    BigInt m = n / 2;
    a = ((a - m) / 2) % m;
    if (a < 0) a += m;
    n = m;
    sign = Rational(-1);
  }
  long long nn = to_ll(n);
  if (nn == 1) return CyclotomicNumber(sign);
  return from_terms(nn, {{a, sign}});
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

Rational CyclotomicNumber::rational_part() const {
  if (!is_rational()) throw DomainError("rational_part: value not rational");
  return coeffs_[0];
}

void CyclotomicNumber::compress() {
  if (conductor_ > 1 && is_rational()) {
    Rational c = coeffs_[0];
    conductor_ = 1;
    coeffs_.assign(1, c);
  }
}

CyclotomicNumber CyclotomicNumber::promoted(long long target) const {
  if (target == conductor_) return *this;
  const long long step = target / conductor_;
  std::vector<Rational> raw(target, Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) raw[k * step] += coeffs_[k];
  }
  return CyclotomicNumber(target, reduce_raw(target, std::move(raw)));
}

CyclotomicNumber CyclotomicNumber::conj() const {
  std::vector<std::pair<BigInt, Rational>> terms;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) {
      terms.emplace_back(BigInt((conductor_ - static_cast<long long>(k)) %
                                conductor_),
                         coeffs_[k]);
    }
  }
  if (terms.empty()) return CyclotomicNumber();
  return from_terms(conductor_, terms);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  long long l = std::lcm(conductor_, o.conductor_);
  if (l != conductor_) *this = promoted(l);
  if (o.conductor_ == l) {
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  } else {
    CyclotomicNumber ob = o.promoted(l);
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += ob.coeffs_[k];
  }
  compress();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  return *this += -o;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  if (is_rational()) {
    Rational s = coeffs_[0];
    *this = o;
    return *this *= s;
  }
  if (o.is_rational()) return *this *= o.coeffs_[0];
  long long l = std::lcm(conductor_, o.conductor_);
  CyclotomicNumber a = promoted(l);
  CyclotomicNumber b = o.promoted(l);
  std::vector<Rational> raw(l, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      raw[(i + j) % l] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  *this = CyclotomicNumber(l, reduce_raw(l, std::move(raw)));
  compress();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& s) {
  if (s == 0) {
    *this = CyclotomicNumber();
    return *this;
  }
  for (Rational& c : coeffs_) c *= s;
  return *this;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
  if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
  long long l = std::lcm(conductor_, o.conductor_);
  return promoted(l).coeffs_ == o.promoted(l).coeffs_;
}

std::string CyclotomicNumber::to_json() const {
  nlohmann::json j;
  j["conductor"] = conductor_;
  nlohmann::json cs = nlohmann::json::array();
  for (const Rational& c : coeffs_) {
    nlohmann::json pair = nlohmann::json::array();
    BigInt num = numerator(c), den = denominator(c);
    if (num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max()) {
      pair.push_back(static_cast<long long>(num));
    } else {
      pair.push_back(num.str());
    }
    if (den <= std::numeric_limits<long long>::max()) {
      pair.push_back(static_cast<long long>(den));
    } else {
      pair.push_back(den.str());
    }
    cs.push_back(pair);
  }
  j["coeffs"] = cs;
  return j.dump();
}

CyclotomicNumber e_frac(long long a, long long n) {
  return CyclotomicNumber::root_of_unity(BigInt(a), BigInt(n));
}

CyclotomicNumber e_frac(const BigInt& a, const BigInt& n) {
  return CyclotomicNumber::root_of_unity(a, n);
}

CyclotomicNumber e_of(const Rational& alpha) {
  return CyclotomicNumber::root_of_unity(numerator(alpha), denominator(alpha));
}

CyclotomicNumber sqrt_exact(unsigned long long n_in) {
  if (n_in == 0) return CyclotomicNumber(Rational(0));
  long long n = static_cast<long long>(n_in);
  long long square_free = 1, square = 1;
  for (const auto& [p, e] : factorize(n)) {
    for (int k = 0; k < e / 2; ++k) square *= p;
    if (e % 2) square_free *= p;
  }
  CyclotomicNumber out{Rational(square)};
  for (const auto& [p, e] : factorize(square_free)) {
    if (p == 2) {
      // sqrt(2) = zeta_8 + zeta_8^-1
      out *= e_frac(1, 8) + e_frac(-1, 8);
    } else {
      // Quadratic Gauss sum: sum_k zeta_p^{k^2} = sqrt(p) for p = 1 (mod 4),
      // i sqrt(p) for p = 3 (mod 4).
      std::vector<std::pair<BigInt, Rational>> terms;
      for (long long k = 0; k < p; ++k) {
        terms.emplace_back(BigInt(k * k % p), Rational(1));
      }
      CyclotomicNumber g =
          CyclotomicNumber::from_terms(p, terms);
      if (p % 4 == 3) g *= e_frac(-1, 4);
      out *= g;
    }
  }
  return out;
}

ComplexApprox embed(const CyclotomicNumber& x, double tolerance) {
  long double re = 0, im = 0;
  const long double two_pi = 6.283185307179586476925286766559L;
  for (size_t k = 0; k < x.coeffs().size(); ++k) {
    const Rational& c = x.coeffs()[k];
    if (c == 0) continue;
    long double cd = static_cast<long double>(c.convert_to<double>());
    long double ang =
        two_pi * static_cast<long double>(k) / x.conductor();
    re += cd * std::cos(ang);
    im += cd * std::sin(ang);
  }
  ComplexApprox out;
  out.re = static_cast<double>(re);
  out.im = static_cast<double>(im);
  out.tolerance = tolerance;
  return out;
}

}  // namespace wrt
