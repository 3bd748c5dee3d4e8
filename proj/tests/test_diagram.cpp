#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csmm/diagram.hpp"

using namespace csmm;

namespace {

const NPoly kN = NPoly::variable();

// Binomial coefficient as a long (arguments stay tiny here).
long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("ribbon disks") {
  const MarkedSurface r2 = MarkedSurface::ribbon_disk(2);
  CHECK(r2.chi == 1);
  CHECK(r2.circles == std::vector<std::vector<int>>{{0, 0}});
  CHECK(r2.num_points() == 2);
  CHECK(r2.deg1() == 1);
  CHECK(r2.deg2() == -1);
  const MarkedSurface r3 = MarkedSurface::ribbon_disk(3, 1);
  CHECK(r3.circles == std::vector<std::vector<int>>{{1, 1, 1}});
  CHECK_THROWS_AS(MarkedSurface::ribbon_disk(0), std::invalid_argument);
}

TEST_CASE("surface canonical form") {
  MarkedSurface s;
  s.chi = 0;
  s.circles = {{1, 0, 0}, {2, 1}};
  s.canonicalize();
  CHECK(s.circles == std::vector<std::vector<int>>{{0, 0, 1}, {1, 2}});

  MarkedSurface t;
  t.chi = 0;
  t.circles = {{0, 0, 1}, {1, 2}};
  CHECK(s == t);
}

TEST_CASE("wheel shapes") {
  const JacobiDiagram w2 = JacobiDiagram::wheel(2);
  CHECK(w2.trivalent.size() == 2);
  CHECK(w2.num_legs() == 2);
  CHECK(w2.num_vertices() == 4);
  CHECK(w2.num_edges() == 4);
  CHECK(w2.deg1() == 2);
  CHECK(w2.deg2() == 0);
  w2.validate();

  const JacobiDiagram w4 = JacobiDiagram::wheel(4);
  CHECK(w4.deg1() == 4);
  CHECK(w4.deg2() == 0);
  CHECK(w4.num_legs() == 4);

  CHECK_THROWS_AS(JacobiDiagram::wheel(1), std::invalid_argument);

  // deg1 = deg2 + number of legs on unitrivalent graphs with all legs distinct.
  for (int n = 2; n <= 6; ++n) {
    const JacobiDiagram w = JacobiDiagram::wheel(n);
    CHECK(w.deg1() == w.deg2() + w.num_legs());
  }
}

TEST_CASE("closed diagrams") {
  const JacobiDiagram th = JacobiDiagram::theta();
  th.validate();
  CHECK(th.num_legs() == 0);
  CHECK(th.deg1() == 1);
  CHECK(th.deg2() == 1);

  const JacobiDiagram tetra = JacobiDiagram::tetrahedron();
  tetra.validate();
  CHECK(tetra.num_legs() == 0);
  CHECK(tetra.deg1() == 2);
  CHECK(tetra.deg2() == 2);

  const JacobiDiagram c = JacobiDiagram::wheel_closure(4, {{0, 1}, {2, 3}});
  c.validate();
  CHECK(c.num_legs() == 0);
  CHECK(c.deg1() == 2);
  CHECK(c.deg2() == 2);

  CHECK_THROWS_AS(JacobiDiagram::wheel_closure(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(JacobiDiagram::wheel_closure(4, {{0, 1}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(JacobiDiagram::wheel_closure(4, {{0, 1}, {2, 7}}), std::invalid_argument);
}

TEST_CASE("diagram validation rejects malformed graphs") {
  JacobiDiagram fixed_point;
  fixed_point.trivalent = {{0, 1, 2}};
  fixed_point.legs = {{3, 0}};
  fixed_point.mate = {0, 3, 1, 2};  // mate[0] = 0 pairs a half-edge with itself
  CHECK_THROWS_AS(fixed_point.validate(), std::invalid_argument);

  JacobiDiagram not_involution;
  not_involution.trivalent = {{0, 1, 2}};
  not_involution.legs = {{3, 0}};
  not_involution.mate = {1, 2, 0, 3};
  CHECK_THROWS_AS(not_involution.validate(), std::invalid_argument);

  JacobiDiagram orphan;
  orphan.trivalent = {{0, 1, 2}};
  orphan.legs = {};
  orphan.mate = {1, 0, 3, 2};  // half-edge 3 belongs to no vertex
  CHECK_THROWS_AS(orphan.validate(), std::invalid_argument);

  JacobiDiagram vertexless_loop;
  vertexless_loop.mate = {1, 0};
  CHECK_THROWS_AS(vertexless_loop.validate(), std::invalid_argument);

  JacobiDiagram doubly_claimed;
  doubly_claimed.trivalent = {{0, 1, 1}};
  doubly_claimed.legs = {{2, 0}, {3, 0}};
  doubly_claimed.mate = {1, 0, 3, 2};
  CHECK_THROWS_AS(doubly_claimed.validate(), std::invalid_argument);

  JacobiDiagram negative_color;
  negative_color.trivalent = {{0, 1, 2}};
  negative_color.legs = {{3, -1}};
  negative_color.mate = {3, 2, 1, 0};
  CHECK_THROWS_AS(negative_color.validate(), std::invalid_argument);
}

TEST_CASE("thickening of the 2-wheel, exact combination") {
  SurfaceCombo want;
  MarkedSurface a;
  a.chi = 0;
  a.circles = {{}, {0, 0}};
  a.canonicalize();
  want.add(a, Rational(2));
  MarkedSurface b;
  b.chi = 0;
  b.circles = {{0}, {0}};
  b.canonicalize();
  want.add(b, Rational(-2));
  CHECK(psi(JacobiDiagram::wheel(2)) == want);
}

TEST_CASE("thickening of the theta graph, exact combination") {
  SurfaceCombo want;
  MarkedSurface one_circle;
  one_circle.chi = -1;
  one_circle.circles = {{}};
  want.add(one_circle, Rational(-2));
  MarkedSurface three_circles;
  three_circles.chi = -1;
  three_circles.circles = {{}, {}, {}};
  want.add(three_circles, Rational(2));
  CHECK(psi(JacobiDiagram::theta()) == want);
}

TEST_CASE("thickening preserves both degrees termwise") {
  const JacobiDiagram diagrams[] = {
      JacobiDiagram::wheel(2), JacobiDiagram::wheel(4), JacobiDiagram::theta(),
      JacobiDiagram::tetrahedron(), JacobiDiagram::wheel_closure(4, {{0, 2}, {1, 3}})};
  for (const auto& d : diagrams) {
    const SurfaceCombo c = psi(d);
    CHECK_FALSE(c.terms.empty());
    for (const auto& [s, coeff] : c.terms) {
      CHECK(s.deg1() == d.deg1());
      CHECK(s.deg2() == d.deg2());
      CHECK_FALSE(coeff.is_zero());
    }
  }
}

TEST_CASE("odd wheels cancel under thickening") {
  // Complementing every vertex marking is a sign flip for an odd vertex count
  // but yields a homeomorphic surface, so the signed sum vanishes.
  CHECK(psi(JacobiDiagram::wheel(3)).terms.empty());
  CHECK(psi(JacobiDiagram::wheel(5)).terms.empty());
}

TEST_CASE("thickening turns disjoint union into products") {
  const JacobiDiagram w2 = JacobiDiagram::wheel(2);
  const JacobiDiagram th = JacobiDiagram::theta();
  CHECK(psi(JacobiDiagram::disjoint_union(w2, w2)) == psi(w2) * psi(w2));
  CHECK(psi(JacobiDiagram::disjoint_union(w2, th)) == psi(w2) * psi(th));
}

TEST_CASE("weight image of the 2-wheel") {
  const SymFunc f = phi(psi(JacobiDiagram::wheel(2)), 1, 4);
  CHECK(f.coeff({Partition{2}}).term(2) == kN * Rational(2));
  CHECK(f.coeff({Partition({1, 1})}).term(2) == NPoly(-2));
  CHECK(f.terms().size() == 2);
}

TEST_CASE("weight image of even wheels matches the binomial formula") {
  for (int n : {4, 6}) {
    const SymFunc f = phi(psi(JacobiDiagram::wheel(n)), 1, n);
    SymFunc want(1, n);
    for (int s = 0; s <= n; ++s) {
      const Rational c((s % 2 == 0 ? 1 : -1) * binom(n, s));
      std::vector<int> parts;
      if (s > 0) parts.push_back(s);
      if (n - s > 0) parts.push_back(n - s);
      NPoly poly(c);
      if (parts.size() < 2) poly *= kN;  // p_0 factors become N
      HSeries h(n);
      h.set_term(n, poly);
      SymFunc t(1, n);
      t.add_term({Partition(parts)}, h);
      want += t;
    }
    CHECK(f.terms() == want.terms());
  }
}

TEST_CASE("weight image of a bare disk") {
  SurfaceCombo c;
  c.add(MarkedSurface::ribbon_disk(3), Rational(1));
  const SymFunc f = phi(c, 1, 4);
  CHECK(f.coeff({Partition{3}}).term(2) == NPoly(1));
  CHECK(f.terms().size() == 1);
}

TEST_CASE("weight image of closed diagrams lands on the empty key") {
  const SymFunc th = phi(psi(JacobiDiagram::theta()), 1, 2);
  CHECK(th.coeff(SymFunc::Key(1)).term(1) == (kN.pow(3) - kN) * Rational(2));
  CHECK(th.terms().size() == 1);
}

TEST_CASE("weight image respects leg colors") {
  const SymFunc f = phi(psi(JacobiDiagram::wheel(2, 1)), 2, 4);
  CHECK(f.coeff({Partition{}, Partition{2}}).term(2) == kN * Rational(2));
  CHECK(f.coeff({Partition{}, Partition({1, 1})}).term(2) == NPoly(-2));

  // A circle mixing two colors has no symmetric-function image.
  MarkedSurface mixed;
  mixed.chi = 1;
  mixed.circles = {{0, 1}};
  SurfaceCombo c;
  c.add(mixed, Rational(1));
  CHECK_THROWS_AS(phi(c, 2, 4), std::domain_error);

  // Colors outside the declared range are rejected.
  SurfaceCombo d;
  d.add(MarkedSurface::ribbon_disk(2, 3), Rational(1));
  CHECK_THROWS_AS(phi(d, 2, 4), std::invalid_argument);
}
