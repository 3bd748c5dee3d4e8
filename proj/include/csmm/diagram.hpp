#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "csmm/symfunc.hpp"

namespace csmm {

// Unitrivalent graph with cyclic orders at trivalent vertices and colored
// univalent legs. Half-edges are integers 0..H-1; `mate` is the fixed-point
// free edge involution. Every half-edge belongs to exactly one vertex slot.
struct JacobiDiagram {
  std::vector<std::array<int, 3>> trivalent;  // half-edges in cyclic order
  std::vector<std::pair<int, int>> legs;      // (half-edge, color)
  std::vector<int> mate;

  void validate() const;

  int num_half_edges() const { return static_cast<int>(mate.size()); }
  int num_edges() const { return num_half_edges() / 2; }
  int num_vertices() const { return static_cast<int>(trivalent.size() + legs.size()); }
  int num_legs() const { return static_cast<int>(legs.size()); }

  // deg1 = half the vertex count; deg2 = edges - vertices = -Euler characteristic.
  int deg1() const { return num_vertices() / 2; }
  int deg2() const { return num_edges() - num_vertices(); }
  int euler_char() const { return num_vertices() - num_edges(); }

  // n-wheel: cycle of n trivalent vertices, one leg per vertex. n >= 2.
  static JacobiDiagram wheel(int n, int color = 0);
  // Wheel with legs glued in pairs; `pairing` is a perfect matching of 0..n-1.
  static JacobiDiagram wheel_closure(int n, const std::vector<std::pair<int, int>>& pairing);
  static JacobiDiagram theta();
  // Complete graph on four trivalent vertices.
  static JacobiDiagram tetrahedron();
  static JacobiDiagram disjoint_union(const JacobiDiagram& a, const JacobiDiagram& b);
};

// Compact oriented surface with boundary, tracked up to homeomorphism by its
// Euler characteristic and the multiset of boundary circles; each circle is a
// cyclic word of marked-point colors (empty for an unmarked circle). Canonical
// form: each word rotated to its lexicographic minimum, circles sorted.
struct MarkedSurface {
  int chi = 0;
  std::vector<std::vector<int>> circles;

  void canonicalize();
  int num_points() const {
    int n = 0;
    for (const auto& c : circles) n += static_cast<int>(c.size());
    return n;
  }
  int deg1() const { return -chi + num_points(); }
  int deg2() const { return -chi; }

  friend bool operator==(const MarkedSurface& a, const MarkedSurface& b) {
    return a.chi == b.chi && a.circles == b.circles;
  }
  friend bool operator<(const MarkedSurface& a, const MarkedSurface& b) {
    if (a.chi != b.chi) return a.chi < b.chi;
    return a.circles < b.circles;
  }

  // Disk with n marked points of one color on its boundary.
  static MarkedSurface ribbon_disk(int n, int color = 0);
};

// Formal rational combination of canonical marked surfaces.
struct SurfaceCombo {
  std::map<MarkedSurface, Rational> terms;

  void add(MarkedSurface s, const Rational& c);
  SurfaceCombo& operator+=(const SurfaceCombo& o);
  SurfaceCombo& operator*=(const Rational& s);
  // Disjoint-union product.
  friend SurfaceCombo operator*(const SurfaceCombo& a, const SurfaceCombo& b);
  friend bool operator==(const SurfaceCombo& a, const SurfaceCombo& b) {
    return a.terms == b.terms;
  }
};

// Thickening map: signed sum over vertex markings of the boundary-walk
// surface; a marked vertex contributes with its cyclic order reversed and a
// factor of -1. Preserves deg1 and deg2 termwise.
SurfaceCombo psi(const JacobiDiagram& d);

// Surface evaluation: each surface maps to N^{#unmarked circles} times
// prod p_n^{(c)} over circles with n points of color c, at hbar^{deg1}.
// Circles mixing colors are rejected.
SymFunc phi(const SurfaceCombo& s, int colors, int order);

// Exact gl_n weight of a closed diagram by tensor contraction of structure
// constants over an explicit matrix basis. Independent of psi/phi.
Rational gln_bruteforce(const JacobiDiagram& d, int n);

}  // namespace csmm
