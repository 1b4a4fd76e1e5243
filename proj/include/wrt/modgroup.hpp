#pragma once

#include <utility>
#include <vector>

#include "wrt/rational.hpp"

namespace wrt {

struct SL2Matrix {
  long long a = 1, b = 0, c = 0, d = 1;

  long long det() const { return a * d - b * c; }
  bool operator==(const SL2Matrix& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

// One partial product (a_i, b_i; c_i, d_i) of T^{m_i} S ... T^{m_1} S.
struct Convergent {
  long long a = 1, b = 0, c = 0, d = 1;
};

// A word T^{m_t} S T^{m_{t-1}} S ... T^{m_1} S, stored as (m_1, ..., m_t)
// together with all partial convergents. Serialized as the integer list
// m_1 first; the product is applied right to left, so m_1 belongs to the
// innermost factor.
class ContinuedFraction {
 public:
  explicit ContinuedFraction(std::vector<long long> entries);

  const std::vector<long long>& entries() const { return entries_; }
  // convergents()[i] holds (a_i, b_i; c_i, d_i); index 0 is the identity.
  const std::vector<Convergent>& convergents() const { return convergents_; }
  long long length() const { return static_cast<long long>(entries_.size()); }

  // Nested-fraction value a_t / c_t as an exact rational:
  //   m_t - 1/(m_{t-1} - 1/(... - 1/m_1)).
  Rational nested_value() const;

 private:
  std::vector<long long> entries_;
  std::vector<Convergent> convergents_;
};

SL2Matrix cf_to_matrix(const ContinuedFraction& cf);

// The unique normal-form expansion of num/den with |num/den| != 1:
// all entries >= 2 for values > 1, all <= -2 for values < -1, and a trailing
// zero entry with the mirrored interior for |value| < 1.
ContinuedFraction cf_expand(long long num, long long den);

// Expansion for the lens gluing word: the all->=2 expansion of -p/q plus a
// trailing zero, with U = cf_to_matrix of the form (q, b; p, d).
// The convention for p = 1 is C = (0), U = (0, -1; 1, 0).
std::pair<ContinuedFraction, SL2Matrix> cf_for_lens(long long p, long long q);

// Chain-link data for a lens expansion: tridiagonal linking matrix with
// diagonal (m_1, ..., m_{t-1}) and unit off-diagonal.
struct LinkingData {
  std::vector<long long> diagonal;
  long long trace = 0;
  long long signature = 0;
  long long weight = 0;

  long long size() const { return static_cast<long long>(diagonal.size()); }
};

LinkingData linking_data(const ContinuedFraction& cf);

}  // namespace wrt
