#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "wrt/tqftrep.hpp"

using namespace wrt;
using Num = NumericBackend;
using Ex = ExactBackend;
using cplx = std::complex<double>;

namespace {

RepMatrix<Num> identity(long long r) {
  RepMatrix<Num> m(r, rep_dim(r));
  for (long long j = 1; j <= m.dim; ++j) m.at(j, j) = 1.0;
  return m;
}

double matdiff(const RepMatrix<Num>& x, const RepMatrix<Num>& y) {
  double worst = 0;
  for (long long j = 1; j <= x.dim; ++j)
    for (long long l = 1; l <= x.dim; ++l)
      worst = std::max(worst, std::abs(x.at(j, l) - y.at(j, l)));
  return worst;
}

}  // namespace

TEST_CASE("theory parameters") {
  TheoryParams params(5);
  CHECK(params.dim == 2);
  // kappa^3 = -i A^{-3}, exactly.
  CyclotomicNumber lhs = params.kappa * params.kappa * params.kappa;
  CyclotomicNumber rhs = e_frac(-1, 4) * e_frac(-3, 2 * 5);
  CHECK(lhs == rhs);
  CHECK(params.zeta == e_frac(1, 8));
  CHECK_THROWS_AS(TheoryParams(7), DomainError);
  CHECK_THROWS_AS(TheoryParams(4), DomainError);
  CHECK_THROWS_AS(TheoryParams(1), DomainError);
}

TEST_CASE("generator matrices at r = 5") {
  RepMatrix<Num> s = rep_generator_s<Num>(5);
  CHECK(s.dim == 2);
  // S is real symmetric; the (1,1) entry is (2/sqrt 5) sin(2 pi / 5).
  CHECK(std::abs(s.at(1, 1) - cplx(0.85065080835204, 0)) < 1e-12);
  CHECK(std::abs(s.at(1, 2) - cplx(0.5257311121191336, 0)) < 1e-12);
  CHECK(std::abs(s.at(1, 2) - s.at(2, 1)) < 1e-15);
  // T is diagonal unitary; entries are mod-r functions of the index, so the
  // value at an even index carries the opposite sign from i e_{2r}(j^2).
  RepMatrix<Num> t = rep_generator_t<Num>(5);
  cplx i(0, 1);
  cplx t1_halfmod = i * Num::e(Rational(1, 10));
  cplx t2_halfmod = i * Num::e(Rational(4, 10));
  CHECK(std::abs(t.at(1, 1) - t1_halfmod) < 1e-12);
  CHECK(std::abs(t.at(2, 2) + t2_halfmod) < 1e-12);
  CHECK(std::abs(std::abs(t.at(1, 1)) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(t.at(2, 2)) - 1.0) < 1e-12);
  CHECK(std::abs(t.at(1, 2)) == 0.0);
}

TEST_CASE("backend coherence of the generators") {
  for (long long r : {5LL, 13LL}) {
    RepMatrix<Num> sn = rep_generator_s<Num>(r);
    RepMatrix<Ex> se = rep_generator_s<Ex>(r);
    for (long long j = 1; j <= sn.dim; ++j) {
      for (long long l = 1; l <= sn.dim; ++l) {
        CHECK(std::abs(to_complex(se.at(j, l)) - sn.at(j, l)) < 1e-10);
      }
      CHECK(std::abs(to_complex(t_entry<Ex>(r, j)) - t_entry<Num>(r, j)) <
            1e-10);
    }
  }
}

TEST_CASE("extended-index symmetries hold exactly") {
  for (long long r : {5LL, 13LL}) {
    for (long long j = 1; j <= r; ++j) {
      CyclotomicNumber tj = t_entry<Ex>(r, j);
      CHECK(t_entry<Ex>(r, j + r) == tj);
      CHECK(t_entry<Ex>(r, r - j) == tj);
      for (long long l = 1; l <= r; ++l) {
        CyclotomicNumber sjl = s_entry<Ex>(r, j, l);
        CHECK(s_entry<Ex>(r, j, l + r) == sjl);
        CHECK(s_entry<Ex>(r, j, r - l) == -sjl);
      }
    }
  }
}

TEST_CASE("representation relations") {
  for (long long r : {5LL, 13LL, 17LL}) {
    RepMatrix<Num> s = rep_generator_s<Num>(r);
    RepMatrix<Num> s2 = matmul(s, s);
    CHECK(matdiff(s2, identity(r)) < 1e-12);  // S^2 = I, so S^4 = I
    RepMatrix<Num> t = rep_generator_t<Num>(r);
    RepMatrix<Num> st = matmul(s, t);
    RepMatrix<Num> p = identity(r);
    for (int k = 0; k < 6; ++k) p = matmul(st, p);
    CHECK(matdiff(p, identity(r)) < 1e-9);  // (ST)^6 = 1: a linear action
  }
}

TEST_CASE("brute-force word products") {
  RepMatrix<Num> s = rep_generator_s<Num>(5);
  RepMatrix<Num> m0 = rep_bruteforce<Num>(5, ContinuedFraction({0}));
  CHECK(matdiff(m0, s) < 1e-15);

  for (long long r : {5LL, 13LL}) {
    RepMatrix<Num> m00 = rep_bruteforce<Num>(r, ContinuedFraction({0, 0}));
    RepMatrix<Num> sq = matmul(m00, m00);
    CHECK(matdiff(sq, identity(r)) < 1e-12);  // (S^2)^2 = I
  }

  RepMatrix<Num> m20 = rep_bruteforce<Num>(5, ContinuedFraction({2, 0}));
  CHECK(std::abs(m20.at(1, 1) -
                 cplx(-0.3090169943749475, -0.42532540417602)) < 1e-12);
}

TEST_CASE("im direct mode matches the stripped word product") {
  // Im for the word (m_1..m_t) equals the product for (m_1..m_t, 0).
  for (long long r : {5LL, 13LL}) {
    for (const auto& entries : std::vector<std::vector<long long>>{
             {2}, {3}, {2, 3}, {4, 2}, {-2, 3}}) {
      std::vector<long long> padded = entries;
      padded.push_back(0);
      RepMatrix<Num> prod = rep_bruteforce<Num>(r, ContinuedFraction(padded));
      ContinuedFraction cf(entries);
      for (long long j = 1; j <= prod.dim; ++j) {
        for (long long l = 1; l <= prod.dim; ++l) {
          cplx direct = im_sum<Num>(r, cf, j, l, ImMode::kDirect);
          CHECK(std::abs(direct - prod.at(j, l)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("im single-layer value") {
  // r=5, word (2): sum_j S_{1j} T_j^2 S_{j1}.
  cplx v = im_sum<Num>(5, ContinuedFraction({2}), 1, 1, ImMode::kDirect);
  CHECK(std::abs(v - cplx(-0.3090169943749475, -0.42532540417602)) < 1e-12);
}

TEST_CASE("im closed mode agrees with direct mode") {
  for (long long r : {5LL, 13LL}) {
    for (const auto& entries : std::vector<std::vector<long long>>{
             {2}, {5}, {2, 3}, {3, 3}, {2, 2, 2}, {5, 3, 4}, {-2, -3},
             {4, -2, 3}}) {
      ContinuedFraction cf(entries);
      bool degenerate = false;
      for (size_t i = 1; i < cf.convergents().size(); ++i) {
        if (cf.convergents()[i].a == 0) degenerate = true;
      }
      if (degenerate) continue;
      long long dim = rep_dim(r);
      for (long long j = 1; j <= dim; ++j) {
        for (long long l = 1; l <= dim; ++l) {
          cplx direct = im_sum<Num>(r, cf, j, l, ImMode::kDirect);
          cplx closed = im_sum<Num>(r, cf, j, l, ImMode::kClosed);
          CHECK(std::abs(direct - closed) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("im closed mode rejects degenerate convergents") {
  // (1, 1) has a_2 = 1*1 - 1 = 0.
  CHECK_THROWS_AS(
      im_sum<Num>(5, ContinuedFraction({1, 1}), 1, 1, ImMode::kClosed),
      DegenerateConvergentError);
}

TEST_CASE("closed word entries match the product") {
  for (long long r : {5LL, 13LL}) {
    for (const auto& entries : std::vector<std::vector<long long>>{
             {2}, {2, 0}, {2, 3, 0}, {3, 2, 4}, {2, 2, 2, 0}}) {
      ContinuedFraction cf(entries);
      RepMatrix<Num> prod = rep_bruteforce<Num>(r, cf);
      for (long long j = 1; j <= prod.dim; ++j) {
        for (long long l = 1; l <= prod.dim; ++l) {
          cplx closed = rep_closed_entry<Num>(r, cf, j, l);
          CHECK(std::abs(closed - prod.at(j, l)) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("closed entries for the bare S word") {
  // (0) has c = 1, t = 1: the closed entry reproduces S itself.
  RepMatrix<Num> s = rep_generator_s<Num>(5);
  for (long long j = 1; j <= 2; ++j) {
    for (long long l = 1; l <= 2; ++l) {
      cplx closed = rep_closed_entry<Num>(5, ContinuedFraction({0}), j, l);
      CHECK(std::abs(closed - s.at(j, l)) < 1e-12);
    }
  }
}

TEST_CASE("closed entries reject c = 0 words") {
  // (0, 0) gives S^2 = -I with lower-left entry 0.
  CHECK_THROWS_AS(
      rep_closed_entry<Num>(5, ContinuedFraction({0, 0}), 1, 1), DomainError);
}

TEST_CASE("exact closed entries equal exact products") {
  ContinuedFraction cf({2, 3, 0});
  RepMatrix<Ex> prod = rep_bruteforce<Ex>(5, cf);
  for (long long j = 1; j <= 2; ++j) {
    for (long long l = 1; l <= 2; ++l) {
      CyclotomicNumber closed = rep_closed_entry<Ex>(5, cf, j, l);
      CHECK(closed == prod.at(j, l));
    }
  }
}

TEST_CASE("exact closed entries over the lens family at r = 5") {
  for (long long p = 2; p <= 8; ++p) {
    for (long long q = -p + 1; q <= -1; ++q) {
      if (std::gcd(p, -q) != 1) continue;
      auto [cf, u] = cf_for_lens(p, q);
      RepMatrix<Ex> prod = rep_bruteforce<Ex>(5, cf);
      for (long long j = 1; j <= prod.dim; ++j)
        for (long long l = 1; l <= prod.dim; ++l)
          CHECK(rep_closed_entry<Ex>(5, cf, j, l) == prod.at(j, l));
    }
  }
}

TEST_CASE("random words: closed entries match products") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> len_pick(1, 5);
  std::uniform_int_distribution<int> entry_pick(0, 7);
  const long long entry_pool[] = {-5, -4, -3, -2, 2, 3, 4, 5};
  int checked = 0;
  for (int it = 0; it < 200 && checked < 120; ++it) {
    std::vector<long long> word(len_pick(rng));
    for (auto& m : word) m = entry_pool[entry_pick(rng)];
    ContinuedFraction cf(word);
    bool degenerate = false;
    for (size_t i = 1; i + 1 < cf.convergents().size(); ++i)
      if (cf.convergents()[i].a == 0) degenerate = true;
    if (degenerate || cf_to_matrix(cf).c == 0) continue;
    long long r = (it % 2) ? 13 : 5;
    RepMatrix<Num> prod = rep_bruteforce<Num>(r, cf);
    long long j = 1 + (it % prod.dim), l = 1 + ((it / 2) % prod.dim);
    cplx closed = rep_closed_entry<Num>(r, cf, j, l);
    CHECK(std::abs(closed - prod.at(j, l)) < 1e-9);
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("exact and numeric word products agree") {
  ContinuedFraction cf({2, 3, 0});
  RepMatrix<Ex> pe = rep_bruteforce<Ex>(13, cf);
  RepMatrix<Num> pn = rep_bruteforce<Num>(13, cf);
  for (long long j = 1; j <= pe.dim; ++j)
    for (long long l = 1; l <= pe.dim; ++l)
      CHECK(std::abs(to_complex(pe.at(j, l)) - pn.at(j, l)) < 1e-10);
}
