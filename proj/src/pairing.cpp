#include "csmm/pairing.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace csmm {
namespace {

// Flattened view of one surface term: points numbered 0..P-1 with their color
// and the cyclic successor along their boundary circle.
struct FlatTerm {
  std::vector<int> color;
  std::vector<int> succ;
  std::vector<int> pred;
  int base_empty = 0;
  int chi = 0;
};

FlatTerm flatten(const MarkedSurface& s) {
  FlatTerm t;
  t.chi = s.chi;
  for (const auto& circle : s.circles) {
    if (circle.empty()) {
      ++t.base_empty;
      continue;
    }
    const int first = static_cast<int>(t.color.size());
    for (int c : circle) {
      t.color.push_back(c);
      t.succ.push_back(static_cast<int>(t.color.size()));
      t.pred.push_back(static_cast<int>(t.color.size()) - 2);
    }
    const int last = static_cast<int>(t.color.size()) - 1;
    t.succ[last] = first;
    t.pred[first] = last;
  }
  return t;
}

// Whether this term survives the degree-m filter: every color present must
// carry exactly 2m points (and a positive m needs at least one point).
bool passes_filter(const FlatTerm& t, std::optional<int> m) {
  std::map<int, int> counts;
  for (int c : t.color) ++counts[c];
  if (m) {
    if (*m == 0) return counts.empty();
    if (counts.empty()) return false;
    for (const auto& [c, n] : counts) {
      if (n != 2 * *m) return false;
    }
  }
  for (const auto& [c, n] : counts) {
    if (n % 2 != 0) return false;
  }
  return true;
}

// Band surgery joining points a and b, in place. Both points are consumed;
// a boundary arc left with no points becomes a closed unmarked circle.
void splice(std::vector<int>& succ, std::vector<int>& pred, int a, int b, int& empties) {
  const int sa = succ[a], pa = pred[a];
  const int sb = succ[b], pb = pred[b];
  const bool a_single = (sa == a);
  const bool b_single = (sb == b);
  if (sa == b && sb == a) {
    empties += 2;
  } else if (a_single && b_single) {
    empties += 1;
  } else if (a_single) {
    succ[pb] = sb;
    pred[sb] = pb;
  } else if (b_single) {
    succ[pa] = sa;
    pred[sa] = pa;
  } else if (sa == b) {
    empties += 1;
    succ[pa] = sb;
    pred[sb] = pa;
  } else if (sb == a) {
    empties += 1;
    succ[pb] = sa;
    pred[sa] = pb;
  } else {
    succ[pa] = sb;
    pred[sb] = pa;
    succ[pb] = sa;
    pred[sa] = pb;
  }
}

struct TermAccum {
  // Histogram of final circle counts over all matchings, exact tally.
  std::map<int, std::uint64_t> circle_hist;
  std::uint64_t matchings = 0;

  void merge(const TermAccum& o) {
    for (const auto& [k, v] : o.circle_hist) circle_hist[k] += v;
    matchings += o.matchings;
  }
};

int lowest_alive(const std::vector<bool>& alive) {
  for (int i = 0; i < static_cast<int>(alive.size()); ++i) {
    if (alive[i]) return i;
  }
  return -1;
}

// Serial enumeration, splice-based circle tracking.
void enumerate_splice(const FlatTerm& t, std::vector<int>& succ, std::vector<int>& pred,
                      std::vector<bool>& alive, int empties, TermAccum& acc) {
  const int a = lowest_alive(alive);
  if (a < 0) {
    ++acc.circle_hist[t.base_empty + empties];
    ++acc.matchings;
    return;
  }
  alive[a] = false;
  for (int b = a + 1; b < static_cast<int>(alive.size()); ++b) {
    if (!alive[b] || t.color[b] != t.color[a]) continue;
    alive[b] = false;
    std::vector<int> succ2 = succ, pred2 = pred;
    int e2 = empties;
    splice(succ2, pred2, a, b, e2);
    enumerate_splice(t, succ2, pred2, alive, e2, acc);
    alive[b] = true;
  }
  alive[a] = true;
}

// Serial enumeration over the same matchings; circles counted at each leaf as
// cycles of x -> partner(succ(x)) on the untouched successor map.
void enumerate_cycles(const FlatTerm& t, std::vector<int>& partner, std::vector<bool>& alive,
                      TermAccum& acc) {
  const int a = lowest_alive(alive);
  if (a < 0) {
    const int n = static_cast<int>(partner.size());
    std::vector<bool> seen(n, false);
    int circles = t.base_empty;
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++circles;
      int cur = s;
      while (!seen[cur]) {
        seen[cur] = true;
        cur = partner[t.succ[cur]];
      }
    }
    ++acc.circle_hist[circles];
    ++acc.matchings;
    return;
  }
  alive[a] = false;
  for (int b = a + 1; b < static_cast<int>(alive.size()); ++b) {
    if (!alive[b] || t.color[b] != t.color[a]) continue;
    alive[b] = false;
    partner[a] = b;
    partner[b] = a;
    enumerate_cycles(t, partner, alive, acc);
    alive[b] = true;
  }
  alive[a] = true;
}

TermAccum pair_term_serial(const FlatTerm& t) {
  TermAccum acc;
  const int n = static_cast<int>(t.color.size());
  std::vector<bool> alive(n, true);
  std::vector<int> succ = t.succ, pred = t.pred;
  enumerate_splice(t, succ, pred, alive, 0, acc);
  return acc;
}

TermAccum pair_term_parallel(const FlatTerm& t) {
  const int n = static_cast<int>(t.color.size());
  if (n == 0) {
    TermAccum acc;
    acc.circle_hist[t.base_empty] = 1;
    acc.matchings = 1;
    return acc;
  }
  const int a = 0;
  std::vector<int> partners;
  for (int b = 1; b < n; ++b) {
    if (t.color[b] == t.color[a]) partners.push_back(b);
  }
  if (partners.empty()) return {};
  std::vector<TermAccum> branch(partners.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < static_cast<int>(partners.size()); ++i) {
    const int b = partners[i];
    std::vector<bool> alive(n, true);
    std::vector<int> partner(n, -1);
    alive[a] = alive[b] = false;
    partner[a] = b;
    partner[b] = a;
    enumerate_cycles(t, partner, alive, branch[i]);
  }
  TermAccum acc;
  for (const auto& br : branch) acc.merge(br);
  return acc;
}

GluedValue run(const SurfaceCombo& in, std::optional<int> m, bool parallel) {
  if (m && *m < 0) throw std::invalid_argument("lmo_pair: negative degree");
  GluedValue out;
  for (const auto& [surface, coeff] : in.terms) {
    const FlatTerm t = flatten(surface);
    if (!passes_filter(t, m)) continue;
    int bands = 0;
    {
      std::map<int, int> counts;
      for (int c : t.color) ++counts[c];
      for (const auto& [c, cnt] : counts) bands += cnt / 2;
    }
    const TermAccum acc = parallel ? pair_term_parallel(t) : pair_term_serial(t);
    const int exponent = bands - t.chi;
    NPoly value;
    for (const auto& [circles, tally] : acc.circle_hist) {
      value += NPoly::monomial(circles, Rational(static_cast<long>(tally)));
    }
    out.add(exponent, value * coeff);
    out.matchings += acc.matchings;
  }
  return out;
}

}  // namespace

GluedValue lmo_pair(const SurfaceCombo& in, std::optional<int> m, bool parallel) {
  return run(in, m, parallel);
}

GluedValue lmo_pair_reference(const SurfaceCombo& in, std::optional<int> m) {
  return run(in, m, false);
}

SurfaceCombo monomial_surface(const std::vector<Partition>& key) {
  MarkedSurface s;
  for (int c = 0; c < static_cast<int>(key.size()); ++c) {
    for (int part : key[c].parts) {
      MarkedSurface disk = MarkedSurface::ribbon_disk(part, c);
      s.chi += disk.chi;
      for (auto& circle : disk.circles) s.circles.push_back(std::move(circle));
    }
  }
  s.canonicalize();
  SurfaceCombo combo;
  combo.add(std::move(s), Rational(1));
  return combo;
}

}  // namespace csmm
