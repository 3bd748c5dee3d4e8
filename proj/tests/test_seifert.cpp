#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "csmm/quadrature.hpp"
#include "csmm/seifert.hpp"

using namespace csmm;

namespace {
const NPoly kN = NPoly::variable();

NPoly npoly_of(std::initializer_list<std::pair<int, Rational>> terms) {
  NPoly p;
  for (const auto& [deg, c] : terms) p += NPoly::monomial(deg, c);
  return p;
}
}  // namespace

TEST_CASE("surgery expansion coefficients") {
  const std::vector<Rational> b = omega_coeffs(3);
  REQUIRE(b.size() == 4);
  CHECK(b[0] == Rational(0));
  CHECK(b[1] == Rational(1, 48));
  CHECK(b[2] == Rational(-1, 5760));
  CHECK(b[3] == Rational(1, 362880));
  CHECK_THROWS_AS(omega_coeffs(0), std::invalid_argument);

  // 2 sum b_{2m} x^{2m} reproduces log(sinh(x/2)/(x/2)) numerically.
  const std::vector<Rational> b6 = omega_coeffs(6);
  for (double x : {0.1, 0.25, 0.4}) {
    double series = 0;
    for (int m = 1; m <= 6; ++m) series += 2 * b6[m].to_double() * std::pow(x, 2 * m);
    const double target = std::log(std::sinh(x / 2) / (x / 2));
    CHECK(series == doctest::Approx(target).epsilon(1e-10));
  }
}

TEST_CASE("potential of the trivial fibration, order 2") {
  const SymFunc f = seifert_potential(seifert_data({{1, 1}}), 2);
  CHECK(f.coeff(SymFunc::Key(1)).term(0) == NPoly(1));
  CHECK(f.coeff({Partition{2}}).term(2) == kN * Rational(1, 12));
  CHECK(f.coeff({Partition({1, 1})}).term(2) == NPoly(Rational(-1, 12)));
  CHECK(f.terms().size() == 3);

  CHECK(seifert_potential(seifert_data({{1, 1}}), 0).terms() ==
        SymFunc::one(1, 0).terms());
}

TEST_CASE("potential of a two-fiber sphere, order 2") {
  // e0 = 5/6; coefficient b_2 e0^{-1} (1/4 + 1/9) on the 2-wheel image.
  const SymFunc f = seifert_potential(seifert_data({{2, 1}, {3, 1}}), 2);
  CHECK(f.coeff({Partition{2}}).term(2) == kN * Rational(13, 720));
  CHECK(f.coeff({Partition({1, 1})}).term(2) == NPoly(Rational(-13, 720)));
}

TEST_CASE("reduced series of the simplest lens space, order 4") {
  const HSeries r = lmo_seifert_reduced(seifert_data({{2, 1}}), 4);
  CHECK(r.term(0) == NPoly(1));
  CHECK(r.term(2) == npoly_of({{3, Rational(5, 48)}, {1, Rational(-5, 48)}}));
  CHECK(r.term(4) == npoly_of({{6, Rational(25, 4608)},
                               {4, Rational(-17, 2304)},
                               {2, Rational(1, 512)}}));
  CHECK(r.term(1).is_zero());
  CHECK(r.term(3).is_zero());
}

TEST_CASE("partition function of the simplest lens space, order 4") {
  // The hbar^2 terms of prefactor and reduced series cancel exactly.
  const HSeries z = lmo_seifert_partition(seifert_data({{2, 1}}), 4);
  CHECK(z.term(0) == NPoly(1));
  CHECK(z.term(2).is_zero());
  CHECK(z.term(4) == npoly_of({{4, Rational(1, 288)}, {2, Rational(-1, 288)}}));
}

TEST_CASE("partition function of the Poincare sphere, order 4") {
  const HSeries z = lmo_seifert_partition(seifert_data({{2, 1}, {3, 1}, {5, -4}}), 4);
  CHECK(z.term(0) == NPoly(1));
  CHECK(z.term(2) == npoly_of({{1, Rational(1)}, {3, Rational(-1)}}));
  CHECK(z.term(4) == npoly_of({{2, Rational(-433, 288)},
                               {4, Rational(289, 288)},
                               {6, Rational(1, 2)}}));
}

TEST_CASE("partition equals framing prefactor times reduced series") {
  for (const auto& pairs : {std::vector<std::pair<long long, long long>>{{2, 1}},
                            std::vector<std::pair<long long, long long>>{{2, 1}, {3, 1}, {5, -4}}}) {
    const SeifertData d = seifert_data(pairs);
    const int order = 4;
    HSeries arg(order);
    arg.set_term(2, (kN.pow(3) - kN) * Rational(2) * (d.phi / Rational(48)));
    const HSeries expect = arg.exp() * lmo_seifert_reduced(d, order);
    CHECK(expect == lmo_seifert_partition(d, order));
  }
}

TEST_CASE("free energy exponentiates back to the partition function") {
  const SeifertData lens = seifert_data({{2, 1}});
  const SeifertData poincare = seifert_data({{2, 1}, {3, 1}, {5, -4}});
  for (int order : {4, 6}) {
    CHECK(lmo_seifert_free_energy(lens, order).exp() == lmo_seifert_partition(lens, order));
  }
  CHECK(lmo_seifert_free_energy(poincare, 4).exp() == lmo_seifert_partition(poincare, 4));
  CHECK(lmo_seifert_free_energy(lens, 4) == lmo_seifert_partition(lens, 4).log());
}

TEST_CASE("potentials satisfy the string-coupling grading") {
  for (const auto& pairs : {std::vector<std::pair<long long, long long>>{{1, 1}},
                            std::vector<std::pair<long long, long long>>{{2, 1}},
                            std::vector<std::pair<long long, long long>>{{3, 2}},
                            std::vector<std::pair<long long, long long>>{{2, 1}, {3, 1}, {5, -4}}}) {
    CHECK(seifert_potential(seifert_data(pairs), 6).is_stringp_valid());
  }
}

TEST_CASE("reduced series matches eigenvalue quadrature at rank two") {
  const SeifertData d = seifert_data({{2, 1}});
  const HSeries r = lmo_seifert_reduced(d, 4);
  const double hbar = 0.05;
  const double g = hbar / std::sqrt(std::fabs(d.e.to_double()));
  const double series = r.eval_double(2.0, hbar);
  const double numeric = seifert_integral_numeric(d, 2, g);
  CHECK(std::fabs(series - numeric) / std::fabs(numeric) <= 1e-4);
}
