#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "csmm/diagram.hpp"

namespace csmm {
namespace {

// Half-edge values are basis indices of gl_n: v = i*n + j stands for e_{ij}.
// The trace form pairs e_{ij} with e_{ji}, so an edge forces the mate's value
// to be the transpose.
int transpose_index(int v, int n) { return (v % n) * n + v / n; }

struct VertexEntry {
  int a, b, c;   // values for the three slots in cyclic order
  int sign;      // +1 for tr(e_a e_b e_c), -1 for the reversed trace
};

// Nonzero entries of f_{abc} = tr(e_a [e_b e_c]): 2n^3 chain patterns.
std::vector<VertexEntry> vertex_entries(int n) {
  std::vector<VertexEntry> out;
  out.reserve(2 * n * n * n);
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      for (int i3 = 0; i3 < n; ++i3) {
        out.push_back({i1 * n + i2, i2 * n + i3, i3 * n + i1, +1});
        out.push_back({i1 * n + i2, i3 * n + i1, i2 * n + i3, -1});
      }
    }
  }
  return out;
}

}  // namespace

Rational gln_bruteforce(const JacobiDiagram& d, int n) {
  d.validate();
  if (!d.legs.empty()) throw std::invalid_argument("gln_bruteforce: diagram has free legs");
  if (n < 1 || n > 4) throw std::invalid_argument("gln_bruteforce: n must be in 1..4");
  if (d.num_edges() > 15) throw std::runtime_error("gln_bruteforce: diagram too large");
  const int V = static_cast<int>(d.trivalent.size());
  if (V == 0) return Rational(1);

  // Owner vertex of each half-edge.
  std::vector<int> owner(d.num_half_edges(), -1);
  for (int v = 0; v < V; ++v) {
    for (int h : d.trivalent[v]) owner[h] = v;
  }

  // Greedy elimination order: always take the vertex closing the most
  // currently open edges, to keep the frontier narrow.
  std::vector<int> order;
  std::vector<bool> done(V, false);
  for (int step = 0; step < V; ++step) {
    int best = -1, best_closed = -1;
    for (int v = 0; v < V; ++v) {
      if (done[v]) continue;
      int closed = 0;
      for (int h : d.trivalent[v]) {
        const int mo = owner[d.mate[h]];
        if (mo == v || done[mo]) ++closed;
      }
      if (closed > best_closed) {
        best = v;
        best_closed = closed;
      }
    }
    order.push_back(best);
    done[best] = true;
  }

  const auto entries = vertex_entries(n);
  // Frontier: fixed set of open half-edges (those whose owner is processed but
  // whose mate's owner is not), each state a value tuple in that order.
  std::vector<int> open_ids;
  std::map<std::vector<std::uint8_t>, long long> states;
  states[{}] = 1;
  std::fill(done.begin(), done.end(), false);

  for (int v : order) {
    const auto [h0, h1, h2] = d.trivalent[v];
    const std::array<int, 3> slots = {h0, h1, h2};
    // Classify each slot: bound by the frontier, internally mated, or new.
    std::array<int, 3> frontier_pos = {-1, -1, -1};
    std::array<int, 3> internal_mate_slot = {-1, -1, -1};
    std::array<bool, 3> opens_new = {false, false, false};
    for (int s = 0; s < 3; ++s) {
      const int mate = d.mate[slots[s]];
      const int mo = owner[mate];
      if (mo == v) {
        for (int s2 = 0; s2 < 3; ++s2) {
          if (slots[s2] == mate) internal_mate_slot[s] = s2;
        }
      } else if (done[mo]) {
        const auto it = std::find(open_ids.begin(), open_ids.end(), slots[s]);
        frontier_pos[s] = static_cast<int>(it - open_ids.begin());
      } else {
        opens_new[s] = true;
      }
    }
    std::vector<int> next_open;
    for (int id : open_ids) {
      if (owner[id] != v) next_open.push_back(id);
    }
    for (int s = 0; s < 3; ++s) {
      if (opens_new[s]) next_open.push_back(d.mate[slots[s]]);
    }
    std::sort(next_open.begin(), next_open.end());
    if (next_open.size() > 12) throw std::runtime_error("gln_bruteforce: diagram too large");
    std::vector<int> keep_pos;
    for (int id : next_open) {
      const auto it = std::find(open_ids.begin(), open_ids.end(), id);
      keep_pos.push_back(it == open_ids.end() ? -1 : static_cast<int>(it - open_ids.begin()));
    }

    std::map<std::vector<std::uint8_t>, long long> next_states;
    for (const auto& [key, coeff] : states) {
      for (const auto& e : entries) {
        const std::array<int, 3> val = {e.a, e.b, e.c};
        bool ok = true;
        for (int s = 0; s < 3 && ok; ++s) {
          if (frontier_pos[s] >= 0) {
            ok = (val[s] == key[frontier_pos[s]]);
          } else if (internal_mate_slot[s] >= 0) {
            ok = (val[s] == transpose_index(val[internal_mate_slot[s]], n));
          }
        }
        if (!ok) continue;
        std::vector<std::uint8_t> nkey(next_open.size());
        for (std::size_t p = 0; p < next_open.size(); ++p) {
          if (keep_pos[p] >= 0) {
            nkey[p] = key[keep_pos[p]];
          } else {
            for (int s = 0; s < 3; ++s) {
              if (opens_new[s] && d.mate[slots[s]] == next_open[p]) {
                nkey[p] = static_cast<std::uint8_t>(transpose_index(val[s], n));
              }
            }
          }
        }
        next_states[nkey] += e.sign * coeff;
      }
    }
    states = std::move(next_states);
    open_ids = std::move(next_open);
    done[v] = true;
  }

  long long total = 0;
  if (auto it = states.find({}); it != states.end()) total = it->second;
  return Rational(static_cast<long>(total));
}

}  // namespace csmm
