#pragma once

#include <cstdint>

#include "csmm/partition.hpp"

namespace csmm {

// Irreducible symmetric-group character chi^lambda(mu) via the border-strip
// (Murnaghan-Nakayama) recursion on beta-sets. Both partitions must have the
// same weight. Memoized behind a mutex-guarded cache; safe for concurrent use.
std::int64_t sym_character(const Partition& lambda, const Partition& mu);

}  // namespace csmm
