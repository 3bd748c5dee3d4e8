#pragma once

#include <vector>

#include "csmm/rational.hpp"

namespace csmm {

// Element of SL(2,Z), laid out as [[p, r], [q, s]].
struct SL2Z {
  long long p = 1, r = 0, q = 0, s = 1;

  void validate() const;
  SL2Z operator-() const { return {-p, -r, -q, -s}; }
};

// Dedekind sum s(p, q) for q >= 1, gcd(p, q) = 1. The argument is reduced
// mod q; s(-p, q) = -s(p, q) follows from that reduction. Computed by the
// O(q) sawtooth sum in integer arithmetic.
Rational dedekind_sum(long long p, long long q);

// Same value by the O(log q) reciprocity descent.
Rational dedekind_sum_fast(long long p, long long q);

// Rademacher function Phi(U) = (p + s)/q - 12 sign(q) s(p, |q|). Defined only
// for q != 0.
Rational rademacher_phi(const SL2Z& u);

// Seifert rational homology sphere X(q_1/p_1, ..., q_n/p_n).
struct SeifertData {
  std::vector<std::pair<long long, long long>> pairs;  // (p_j, q_j)
  long long big_p = 0;   // P = prod p_j
  long long h = 0;       // H = P * sum q_j / p_j, the order of H_1
  Rational e;            // e = H / P
  Rational phi;          // phi = e - 3 sign(e) - 12 sum s(q_j, p_j)

  int n() const { return static_cast<int>(pairs.size()); }
};

SeifertData seifert_data(const std::vector<std::pair<long long, long long>>& pairs);

// Signature of a symmetric matrix, by exact pivoting over the rationals.
int linking_signature(const std::vector<std::vector<Rational>>& m);

}  // namespace csmm
