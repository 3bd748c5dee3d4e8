#pragma once

#include <optional>

#include "csmm/diagram.hpp"

namespace csmm {

// Result of the cup pairing. Keys are hbar exponents equal to minus the Euler
// characteristic of the glued surface; `total` strips that grading and returns
// the plain N-polynomial (the normalization used when comparing against
// Gaussian moments). `matchings` counts the pair assignments enumerated.
struct GluedValue {
  std::map<int, NPoly> by_exponent;
  std::uint64_t matchings = 0;

  NPoly total() const {
    NPoly acc;
    for (const auto& [k, p] : by_exponent) acc += p;
    return acc;
  }

  void add(int exponent, const NPoly& p) {
    if (p.is_zero()) return;
    auto it = by_exponent.find(exponent);
    if (it == by_exponent.end()) {
      by_exponent[exponent] = p;
    } else {
      it->second += p;
      if (it->second.is_zero()) by_exponent.erase(it);
    }
  }

  void merge(const GluedValue& o) {
    for (const auto& [k, p] : o.by_exponent) add(k, p);
    matchings += o.matchings;
  }
};

// Pairs the marked points of each color against a bank of half-weighted cup
// strips: equivalently, sums over the perfect matchings of each color's
// points, gluing a band per matched pair (chi drops by one per band; fully
// unmarked circles count as factors of N). A color with an odd number of
// points annihilates the term. If `m` is given, any term whose per-color point
// count differs from 2m is dropped (the degree-m piece of the pairing).
GluedValue lmo_pair(const SurfaceCombo& in, std::optional<int> m = std::nullopt,
                    bool parallel = true);

// Serial reference implementation (same contract, no thread decomposition).
GluedValue lmo_pair_reference(const SurfaceCombo& in, std::optional<int> m = std::nullopt);

// Disjoint union of one marked disk per part, per color: the surface
// realization of a power-sum monomial.
SurfaceCombo monomial_surface(const std::vector<Partition>& key);

}  // namespace csmm
