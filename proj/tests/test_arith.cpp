#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include <numeric>
#include <random>

#include "csmm/arith.hpp"

using namespace csmm;

namespace {

Rational reciprocity_rhs(long long p, long long q) {
  // s(p,q) + s(q,p) = -1/4 + (p/q + q/p + 1/(pq)) / 12
  return Rational(-1, 4) + (Rational(static_cast<long>(p), static_cast<long>(q)) +
                            Rational(static_cast<long>(q), static_cast<long>(p)) +
                            Rational(1) / Rational(static_cast<long>(p * q))) *
                               Rational(1, 12);
}

// s(p, q) through the closed cotangent form, in 256-bit arithmetic.
double dedekind_cotangent(long long p, long long q) {
  const mpfr_prec_t prec = 256;
  mpfr_t pi, x, y, acc, t;
  mpfr_inits2(prec, pi, x, y, acc, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_zero(acc, 1);
  for (long long n = 1; n < q; ++n) {
    mpfr_mul_si(x, pi, n, MPFR_RNDN);
    mpfr_div_si(x, x, q, MPFR_RNDN);
    mpfr_cot(x, x, MPFR_RNDN);
    mpfr_mul_si(y, pi, n * p % q, MPFR_RNDN);
    mpfr_div_si(y, y, q, MPFR_RNDN);
    mpfr_cot(y, y, MPFR_RNDN);
    mpfr_mul(t, x, y, MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }
  mpfr_div_si(acc, acc, 4 * q, MPFR_RNDN);
  const double out = mpfr_get_d(acc, MPFR_RNDN);
  mpfr_clears(pi, x, y, acc, t, static_cast<mpfr_ptr>(nullptr));
  return out;
}

}  // namespace

TEST_CASE("dedekind sums, frozen values") {
  CHECK(dedekind_sum(0, 1) == Rational(0));
  CHECK(dedekind_sum(1, 2) == Rational(0));
  CHECK(dedekind_sum(1, 3) == Rational(1, 18));
  CHECK(dedekind_sum(2, 3) == Rational(-1, 18));
  CHECK(dedekind_sum(3, 5) == Rational(0));
  CHECK(dedekind_sum(1, 5) == Rational(1, 5));
}

TEST_CASE("dedekind symmetries") {
  for (long long q : {5LL, 7LL, 12LL, 25LL}) {
    for (long long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(dedekind_sum(p + q, q) == dedekind_sum(p, q));
      CHECK(dedekind_sum(-p, q) == -dedekind_sum(p, q));
    }
  }
}

TEST_CASE("reciprocity descent equals the sawtooth sum") {
  CHECK(dedekind_sum_fast(0, 1) == Rational(0));
  for (long long q = 2; q <= 60; ++q)
    for (long long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      CHECK(dedekind_sum_fast(p, q) == dedekind_sum(p, q));
    }
}

TEST_CASE("reciprocity law on random pairs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> dist(1, 10000);
  int done = 0;
  while (done < 50) {
    const long long p = dist(rng), q = dist(rng);
    if (std::gcd(p, q) != 1) continue;
    CHECK(dedekind_sum_fast(p, q) + dedekind_sum_fast(q, p) == reciprocity_rhs(p, q));
    ++done;
  }
}

TEST_CASE("cotangent closed form agrees to twelve digits") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> dist(2, 500);
  int done = 0;
  while (done < 50) {
    const long long q = dist(rng);
    const long long p = dist(rng) % q;
    if (p == 0 || std::gcd(p, q) != 1) continue;
    const double exact = dedekind_sum(p, q).to_double();
    CHECK(std::fabs(dedekind_cotangent(p, q) - exact) <= 1e-12);
    ++done;
  }
}

TEST_CASE("dedekind domain errors") {
  CHECK_THROWS_AS(dedekind_sum(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(dedekind_sum(1, -3), std::invalid_argument);
  CHECK_THROWS_AS(dedekind_sum(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(dedekind_sum_fast(2, 4), std::invalid_argument);
}

TEST_CASE("rademacher function") {
  CHECK(rademacher_phi({0, -1, 1, 0}) == Rational(0));
  CHECK(rademacher_phi({1, 0, 1, 1}) == Rational(2));
  CHECK(rademacher_phi({2, 1, 1, 1}) == Rational(3));
  const SL2Z matrices[] = {{0, -1, 1, 0}, {2, 1, 1, 1}, {5, 2, 2, 1}, {12, 5, 7, 3}};
  for (const SL2Z& u : matrices) CHECK(rademacher_phi(-u) == rademacher_phi(u));
  CHECK_THROWS_AS(rademacher_phi({1, 1, 0, 1}), std::invalid_argument);  // q = 0
  CHECK_THROWS_AS(SL2Z({2, 1, 2, 1}).validate(), std::invalid_argument);
}

TEST_CASE("seifert data, frozen invariants") {
  const SeifertData poincare = seifert_data({{2, 1}, {3, 1}, {5, -4}});
  CHECK(poincare.big_p == 30);
  CHECK(poincare.h == 1);
  CHECK(poincare.e == Rational(1, 30));
  CHECK(poincare.phi == Rational(-181, 30));
  CHECK(poincare.n() == 3);

  const SeifertData lens = seifert_data({{2, 1}});
  CHECK(lens.big_p == 2);
  CHECK(lens.h == 1);
  CHECK(lens.e == Rational(1, 2));
  CHECK(lens.phi == Rational(-5, 2));

  const SeifertData big_h = seifert_data({{2, 1}, {3, 1}, {5, 1}});
  CHECK(big_h.h == 31);
  CHECK(big_h.e == Rational(31, 30));
}

TEST_CASE("seifert data validation") {
  CHECK_THROWS_AS(seifert_data({}), std::invalid_argument);
  CHECK_THROWS_AS(seifert_data({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(seifert_data({{4, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(seifert_data({{2, 1}, {4, 1}}), std::invalid_argument);  // shared factor 2
  CHECK_THROWS_AS(seifert_data({{1, 1}, {1, -1}}), std::invalid_argument);  // H = 0
}

TEST_CASE("signature by exact pivoting") {
  using Row = std::vector<Rational>;
  CHECK(linking_signature({Row{Rational(1)}}) == 1);
  CHECK(linking_signature({Row{Rational(0)}}) == 0);
  CHECK(linking_signature({Row{Rational(0), Rational(1)}, Row{Rational(1), Rational(0)}}) == 0);
  CHECK(linking_signature({Row{Rational(2), Rational(0), Rational(0)},
                           Row{Rational(0), Rational(-3), Rational(0)},
                           Row{Rational(0), Rational(0), Rational(5)}}) == 1);
  CHECK(linking_signature({Row{Rational(-1)}}) == -1);
  CHECK_THROWS_AS(linking_signature({Row{Rational(1), Rational(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(linking_signature({Row{Rational(1), Rational(2)},
                                     Row{Rational(3), Rational(4)}}),
                  std::invalid_argument);
}
