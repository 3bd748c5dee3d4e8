#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "csmm/characters.hpp"
#include "csmm/partition.hpp"

using namespace csmm;

TEST_CASE("partition normalization") {
  CHECK(Partition({1, 3, 2}) == Partition({3, 2, 1}));
  CHECK(Partition({2, 0, 1}) == Partition({2, 1}));  // zero parts dropped
  CHECK(Partition{}.empty());
  CHECK(Partition({4, 4, 1}).weight() == 9);
  CHECK(Partition({4, 4, 1}).num_parts() == 3);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("partition parsing") {
  CHECK(Partition::from_string("2,1,1") == Partition({2, 1, 1}));
  CHECK(Partition::from_string("[2,1,1]") == Partition({2, 1, 1}));
  CHECK(Partition::from_string("1,3") == Partition({3, 1}));
  CHECK(Partition::from_string("") == Partition{});
  CHECK(Partition::from_string("[]") == Partition{});
  CHECK_THROWS_AS(Partition::from_string("2,x"), std::invalid_argument);
  CHECK(Partition({3, 1}).to_string() == "[3,1]");
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(1) == std::vector<Partition>{Partition{1}});

  const std::vector<Partition> p4 = partitions_of(4);
  const std::vector<Partition> want = {Partition{4}, Partition{3, 1}, Partition{2, 2},
                                       Partition{2, 1, 1}, Partition{1, 1, 1, 1}};
  CHECK(p4 == want);

  CHECK(partitions_of(8).size() == 22);
  for (int n = 0; n <= 9; ++n) {
    const auto ps = partitions_of(n);
    CHECK(std::is_sorted(ps.begin(), ps.end()));  // enumeration matches operator<
    for (const auto& p : ps) CHECK(p.weight() == n);
  }
}

TEST_CASE("symmetrizer orders z_mu") {
  CHECK(Partition{}.z() == Rational(1));
  CHECK(Partition{1}.z() == Rational(1));
  CHECK(Partition{2}.z() == Rational(2));
  CHECK(Partition({1, 1}).z() == Rational(2));
  CHECK(Partition({2, 1}).z() == Rational(2));
  CHECK(Partition{3}.z() == Rational(3));
  CHECK(Partition({3, 1}).z() == Rational(3));
  CHECK(Partition({2, 2}).z() == Rational(8));
  CHECK(Partition({1, 1, 1}).z() == Rational(6));
  CHECK(Partition({1, 1, 1, 1}).z() == Rational(24));

  // sum over mu of 1/z_mu = 1 (class equation of S_n).
  for (int n = 1; n <= 7; ++n) {
    Rational acc(0);
    for (const auto& mu : partitions_of(n)) acc += Rational(1) / mu.z();
    CHECK(acc == Rational(1));
  }
}

TEST_CASE("conjugation") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
  CHECK(Partition{}.conjugate() == Partition{});
  for (int n = 0; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("character values frozen") {
  CHECK(sym_character(Partition{2}, Partition{2}) == 1);
  CHECK(sym_character(Partition({1, 1}), Partition{2}) == -1);
  CHECK(sym_character(Partition{2}, Partition({1, 1})) == 1);
  CHECK(sym_character(Partition({1, 1}), Partition({1, 1})) == 1);

  CHECK(sym_character(Partition({2, 1}), Partition{3}) == -1);
  CHECK(sym_character(Partition({2, 1}), Partition({2, 1})) == 0);
  CHECK(sym_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);

  CHECK(sym_character(Partition{}, Partition{}) == 1);
}

TEST_CASE("trivial and sign characters") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> ones(n, 1);
    const Partition row{std::vector<int>{n}};
    const Partition column{ones};
    for (const auto& mu : partitions_of(n)) {
      CHECK(sym_character(row, mu) == 1);
      const int sign = ((n - mu.num_parts()) % 2 == 0) ? 1 : -1;
      CHECK(sym_character(column, mu) == sign);
    }
  }
}

TEST_CASE("character orthogonality") {
  for (int n = 1; n <= 6; ++n) {
    const auto parts = partitions_of(n);
    // Columns: sum over lambda of chi(mu) chi(nu) = z_mu delta.
    for (const auto& mu : parts)
      for (const auto& nu : parts) {
        Rational acc(0);
        for (const auto& lam : parts)
          acc += Rational(static_cast<long>(sym_character(lam, mu)) *
                          static_cast<long>(sym_character(lam, nu)));
        CHECK(acc == (mu == nu ? mu.z() : Rational(0)));
      }
    // Rows: sum over mu of chi_lam chi_rho / z_mu = delta.
    for (const auto& lam : parts)
      for (const auto& rho : parts) {
        Rational acc(0);
        for (const auto& mu : parts)
          acc += Rational(static_cast<long>(sym_character(lam, mu)) *
                          static_cast<long>(sym_character(rho, mu))) /
                 mu.z();
        CHECK(acc == (lam == rho ? Rational(1) : Rational(0)));
      }
  }
}

TEST_CASE("character weight mismatch is rejected") {
  CHECK_THROWS_AS(sym_character(Partition{2}, Partition{3}), std::invalid_argument);
}
