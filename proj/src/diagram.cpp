#include "csmm/diagram.hpp"

#include <algorithm>

namespace csmm {

void JacobiDiagram::validate() const {
  int h = num_half_edges();
  std::vector<int> owner(h, -1);
  auto claim = [&](int he) {
    if (he < 0 || he >= h) throw std::invalid_argument("JacobiDiagram: half-edge out of range");
    if (owner[he] != -1) throw std::invalid_argument("JacobiDiagram: half-edge claimed twice");
    owner[he] = 1;
  };
  for (const auto& v : trivalent)
    for (int he : v) claim(he);
  for (const auto& [he, color] : legs) {
    claim(he);
    if (color < 0) throw std::invalid_argument("JacobiDiagram: negative color");
  }
  for (int he = 0; he < h; ++he)
    if (owner[he] == -1) throw std::invalid_argument("JacobiDiagram: orphan half-edge");
  if (static_cast<int>(trivalent.size()) * 3 + static_cast<int>(legs.size()) != h)
    throw std::invalid_argument("JacobiDiagram: vertex slots do not cover half-edges");
  for (int he = 0; he < h; ++he) {
    int m = mate[he];
    if (m < 0 || m >= h || m == he || mate[m] != he)
      throw std::invalid_argument("JacobiDiagram: mate is not a fixed-point-free involution");
  }
}

JacobiDiagram JacobiDiagram::wheel(int n, int color) {
  if (n < 2) throw std::invalid_argument("wheel: need n >= 2");
  JacobiDiagram d;
  d.mate.assign(4 * n, -1);
  // Vertex i owns spoke 3i, rim-out 3i+1, rim-in 3i+2; leg i owns 3n+i.
  for (int i = 0; i < n; ++i) {
    d.trivalent.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    d.legs.emplace_back(3 * n + i, color);
    int j = (i + 1) % n;
    d.mate[3 * i + 1] = 3 * j + 2;
    d.mate[3 * j + 2] = 3 * i + 1;
    d.mate[3 * i] = 3 * n + i;
    d.mate[3 * n + i] = 3 * i;
  }
  d.validate();
  return d;
}

JacobiDiagram JacobiDiagram::wheel_closure(int n, const std::vector<std::pair<int, int>>& pairing) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("wheel_closure: need even n >= 2");
  std::vector<int> seen(n, 0);
  for (const auto& [a, b] : pairing) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw std::invalid_argument("wheel_closure: bad leg pair");
    ++seen[a];
    ++seen[b];
  }
  for (int s : seen)
    if (s != 1) throw std::invalid_argument("wheel_closure: pairing is not a perfect matching");
  JacobiDiagram d;
  d.mate.assign(3 * n, -1);
  for (int i = 0; i < n; ++i) {
    d.trivalent.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    int j = (i + 1) % n;
    d.mate[3 * i + 1] = 3 * j + 2;
    d.mate[3 * j + 2] = 3 * i + 1;
  }
  for (const auto& [a, b] : pairing) {
    d.mate[3 * a] = 3 * b;
    d.mate[3 * b] = 3 * a;
  }
  d.validate();
  return d;
}

JacobiDiagram JacobiDiagram::theta() { return wheel_closure(2, {{0, 1}}); }

JacobiDiagram JacobiDiagram::tetrahedron() {
  JacobiDiagram d;
  // Vertex v owns half-edges 3v..3v+2, slot k at vertex v points at the k-th
  // other vertex in ascending order.
  d.trivalent = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}};
  d.mate.assign(12, -1);
  auto connect = [&](int u, int v) {
    auto slot = [](int from, int to) {
      int k = 0;
      for (int w = 0; w < 4; ++w) {
        if (w == from) continue;
        if (w == to) return 3 * from + k;
        ++k;
      }
      throw std::logic_error("tetrahedron slot");
    };
    int a = slot(u, v), b = slot(v, u);
    d.mate[a] = b;
    d.mate[b] = a;
  };
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) connect(u, v);
  d.validate();
  return d;
}

JacobiDiagram JacobiDiagram::disjoint_union(const JacobiDiagram& a, const JacobiDiagram& b) {
  JacobiDiagram d = a;
  int off = a.num_half_edges();
  for (const auto& v : b.trivalent) d.trivalent.push_back({v[0] + off, v[1] + off, v[2] + off});
  for (const auto& [he, color] : b.legs) d.legs.emplace_back(he + off, color);
  d.mate.resize(off + b.num_half_edges());
  for (int he = 0; he < b.num_half_edges(); ++he) d.mate[off + he] = b.mate[he] + off;
  d.validate();
  return d;
}

void MarkedSurface::canonicalize() {
  for (auto& word : circles) {
    if (word.size() < 2) continue;
    // Lexicographically minimal rotation (words are short; quadratic is fine).
    std::vector<int> best = word;
    std::vector<int> rot = word;
    for (size_t r = 1; r < word.size(); ++r) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (rot < best) best = rot;
    }
    word = best;
  }
  std::sort(circles.begin(), circles.end());
}

MarkedSurface MarkedSurface::ribbon_disk(int n, int color) {
  if (n < 1) throw std::invalid_argument("ribbon_disk: need n >= 1");
  MarkedSurface s;
  s.chi = 1;
  s.circles.push_back(std::vector<int>(n, color));
  s.canonicalize();
  return s;
}

void SurfaceCombo::add(MarkedSurface s, const Rational& c) {
  if (c.is_zero()) return;
  s.canonicalize();
  auto it = terms.find(s);
  if (it == terms.end()) {
    terms.emplace(std::move(s), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

SurfaceCombo& SurfaceCombo::operator+=(const SurfaceCombo& o) {
  for (const auto& [s, c] : o.terms) add(s, c);
  return *this;
}

SurfaceCombo& SurfaceCombo::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [k, c] : terms) c *= s;
  return *this;
}

SurfaceCombo operator*(const SurfaceCombo& a, const SurfaceCombo& b) {
  SurfaceCombo r;
  for (const auto& [sa, ca] : a.terms)
    for (const auto& [sb, cb] : b.terms) {
      MarkedSurface s;
      s.chi = sa.chi + sb.chi;
      s.circles = sa.circles;
      s.circles.insert(s.circles.end(), sb.circles.begin(), sb.circles.end());
      r.add(std::move(s), ca * cb);
    }
  return r;
}

SurfaceCombo psi(const JacobiDiagram& d) {
  d.validate();
  int h = d.num_half_edges();
  int t = static_cast<int>(d.trivalent.size());
  if (t > 30) throw std::invalid_argument("psi: too many trivalent vertices");
  std::vector<int> leg_color(h, -1);
  for (const auto& [he, color] : d.legs) leg_color[he] = color;

  int surface_chi = d.num_vertices() - d.num_edges();
  SurfaceCombo out;
  std::vector<int> sigma(h);
  for (std::uint32_t marking = 0; marking < (1u << t); ++marking) {
    for (const auto& [he, color] : d.legs) sigma[he] = he;
    for (int v = 0; v < t; ++v) {
      const auto& [a, b, c] = d.trivalent[v];
      if (marking >> v & 1u) {
        sigma[a] = c;
        sigma[c] = b;
        sigma[b] = a;
      } else {
        sigma[a] = b;
        sigma[b] = c;
        sigma[c] = a;
      }
    }
    // Boundary walk: orbits of sigma(mate(.)); visiting a leg half-edge
    // deposits its color on the current circle.
    MarkedSurface s;
    s.chi = surface_chi;
    std::vector<char> visited(h, 0);
    for (int start = 0; start < h; ++start) {
      if (visited[start]) continue;
      std::vector<int> word;
      int cur = start;
      do {
        visited[cur] = 1;
        if (leg_color[cur] >= 0) word.push_back(leg_color[cur]);
        cur = sigma[d.mate[cur]];
      } while (cur != start);
      s.circles.push_back(std::move(word));
    }
    int sign_bits = __builtin_popcount(marking);
    out.add(std::move(s), Rational(sign_bits % 2 == 0 ? 1 : -1));
  }
  return out;
}

SymFunc phi(const SurfaceCombo& in, int colors, int order) {
  SymFunc out(colors, order);
  for (const auto& [s, c] : in.terms) {
    int unmarked = 0;
    SymFunc::Key key(colors);
    for (const auto& word : s.circles) {
      if (word.empty()) {
        ++unmarked;
        continue;
      }
      int color = word[0];
      for (int x : word)
        if (x != color) throw std::domain_error("phi: circle mixes colors");
      if (color >= colors) throw std::invalid_argument("phi: color out of range");
      key[color].parts.push_back(static_cast<int>(word.size()));
    }
    for (auto& p : key) p.normalize();
    HSeries coeff(order);
    coeff.set_term(s.deg1(), NPoly::monomial(unmarked, c));
    out.add_term(std::move(key), std::move(coeff));
  }
  return out;
}

}  // namespace csmm
