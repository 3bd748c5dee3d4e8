#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "csmm/gue.hpp"
#include "csmm/wick.hpp"

using namespace csmm;

TEST_CASE("sampling is deterministic in the seed") {
  const McEstimate a = gue_sample_moments(2, Partition{2}, 40000, 12345);
  const McEstimate b = gue_sample_moments(2, Partition{2}, 40000, 12345);
  CHECK(a.value == b.value);
  CHECK(a.stderr_ == b.stderr_);
  CHECK(a.samples == 40000);

  const McEstimate c = gue_sample_moments(2, Partition{2}, 40000, 54321);
  CHECK(a.value != c.value);
}

TEST_CASE("parallel dispatch does not change the stream") {
  const McEstimate a = gue_sample_moments(2, Partition({2, 1}), 50000, 3, false);
  const McEstimate b = gue_sample_moments(2, Partition({2, 1}), 50000, 3, true);
  CHECK(a.value == b.value);
  CHECK(a.stderr_ == b.stderr_);
}

TEST_CASE("estimates straddle the exact moments") {
  const struct {
    int n;
    Partition lam;
  } cells[] = {{2, Partition{2}}, {3, Partition({1, 1})}, {2, Partition{4}},
               {1, Partition{2}}, {3, Partition{3}}};
  for (const auto& cell : cells) {
    const McEstimate est = gue_sample_moments(cell.n, cell.lam, 200000, 20260819);
    const double exact = gauss_moment(cell.lam).eval(cell.n).to_double();
    CHECK(est.stderr_ > 0);
    CHECK(std::fabs(est.value - exact) <= 3 * est.stderr_);
  }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(gue_sample_moments(0, Partition{2}, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(gue_sample_moments(2, Partition{2}, 0, 1), std::invalid_argument);
}
