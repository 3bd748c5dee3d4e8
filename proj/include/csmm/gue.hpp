#pragma once

#include <cstdint>

#include "csmm/partition.hpp"

namespace csmm {

struct McEstimate {
  double value = 0;
  double stderr_ = 0;
  std::uint64_t samples = 0;
};

// Monte Carlo estimate of <p_lambda> over Hermitian matrices drawn from
// exp(-tr M^2 / 2): real diagonal of unit variance, off-diagonal real and
// imaginary parts of variance 1/2. Batches own seed-derived substreams and are
// combined in batch order, so the result depends only on (arguments, seed),
// not on the thread count; `parallel` only toggles the OpenMP dispatch.
McEstimate gue_sample_moments(int n, const Partition& lambda, std::uint64_t samples,
                              std::uint64_t seed, bool parallel = true);

}  // namespace csmm
