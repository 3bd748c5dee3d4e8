#include "csmm/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace csmm {
namespace {

long long positive_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

void SL2Z::validate() const {
  if (p * s - q * r != 1) throw std::invalid_argument("SL2Z: determinant must be 1");
}

Rational dedekind_sum(long long p, long long q) {
  if (q < 1) throw std::invalid_argument("dedekind_sum: q must be >= 1");
  const long long a = positive_mod(p, q);
  if (std::gcd(a, q) != 1) throw std::invalid_argument("dedekind_sum: arguments must be coprime");
  // s(a,q) = sum_n (2n-q)(2r_n-q) / (4q^2) with r_n = n a mod q; both factors
  // are bounded by q, so the numerator fits in 128 bits for any q < 2^42.
  __int128 acc = 0;
  long long r = 0;
  for (long long n = 1; n < q; ++n) {
    r += a;
    if (r >= q) r -= q;
    acc += static_cast<__int128>(2 * n - q) * (2 * r - q);
  }
  const bool neg = acc < 0;
  if (neg) acc = -acc;
  const auto hi = static_cast<unsigned long long>(acc >> 64);
  const auto lo = static_cast<unsigned long long>(acc);
  mpz_class num(static_cast<unsigned long>(hi));
  num <<= 64;
  num += mpz_class(static_cast<unsigned long>(lo));
  if (neg) num = -num;
  mpz_class den(static_cast<long>(q));
  den *= den;
  den *= 4;
  return Rational(num) / Rational(den);
}

Rational dedekind_sum_fast(long long p, long long q) {
  if (q < 1) throw std::invalid_argument("dedekind_sum: q must be >= 1");
  long long a = positive_mod(p, q);
  if (std::gcd(a, q) != 1) throw std::invalid_argument("dedekind_sum: arguments must be coprime");
  // Reciprocity descent: s(a,q) + s(q,a) = -1/4 + (a/q + q/a + 1/(aq))/12.
  Rational acc(0);
  int sign = 1;
  while (a != 0) {
    Rational rec = Rational(-1, 4) +
                   (Rational(static_cast<long>(a), static_cast<long>(q)) + Rational(static_cast<long>(q), static_cast<long>(a)) + Rational(1) / Rational(static_cast<long>(a * q))) * Rational(1, 12);
    acc += rec * Rational(sign);
    sign = -sign;
    const long long next = positive_mod(q, a);
    q = a;
    a = next;
  }
  return acc;
}

Rational rademacher_phi(const SL2Z& u) {
  u.validate();
  if (u.q == 0)
    throw std::invalid_argument("rademacher_phi: q = 0 is outside the formula's domain");
  const int sign_q = u.q > 0 ? 1 : -1;
  return Rational(u.p + u.s, u.q) - Rational(12 * sign_q) * dedekind_sum(u.p, std::abs(u.q));
}

SeifertData seifert_data(const std::vector<std::pair<long long, long long>>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("seifert_data: need at least one fiber");
  for (const auto& [p, q] : pairs) {
    if (p < 1) throw std::invalid_argument("seifert_data: p_j must be >= 1");
    if (std::gcd(std::abs(p), std::abs(q)) != 1)
      throw std::invalid_argument("seifert_data: p_j and q_j must be coprime");
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (std::gcd(pairs[i].first, pairs[j].first) != 1)
        throw std::invalid_argument("seifert_data: the p_j must be pairwise coprime");

  SeifertData d;
  d.pairs = pairs;
  d.big_p = 1;
  for (const auto& [p, q] : pairs) d.big_p *= p;
  d.h = 0;
  for (const auto& [p, q] : pairs) d.h += q * (d.big_p / p);
  if (d.h == 0) throw std::invalid_argument("seifert_data: H = 0, not a rational homology sphere");
  d.e = Rational(d.h, d.big_p);
  Rational dsums(0);
  for (const auto& [p, q] : pairs) {
    if (p > 1) dsums += dedekind_sum(q, p);
  }
  d.phi = d.e - Rational(3 * d.e.sign()) - Rational(12) * dsums;
  return d;
}

int linking_signature(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("linking_signature: matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i]) throw std::invalid_argument("linking_signature: matrix must be symmetric");

  std::vector<std::vector<Rational>> a = m;
  std::vector<bool> done(n, false);
  int sig = 0;
  while (true) {
    // Diagonal pivot if available.
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && a[i][i] != Rational(0)) {
        piv = i;
        break;
      }
    }
    if (piv < n) {
      const Rational d = a[piv][piv];
      sig += d.sign();
      done[piv] = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (done[j]) continue;
          a[i][j] -= a[i][piv] * a[piv][j] / d;
        }
      }
      continue;
    }
    // All remaining diagonal entries are zero: any nonzero off-diagonal pair
    // is a hyperbolic block (signature 0); eliminate it by its Schur complement.
    std::size_t bi = n, bj = n;
    for (std::size_t i = 0; i < n && bi == n; ++i) {
      if (done[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!done[j] && a[i][j] != Rational(0)) {
          bi = i;
          bj = j;
          break;
        }
      }
    }
    if (bi == n) break;
    const Rational b = a[bi][bj];
    done[bi] = done[bj] = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      for (std::size_t l = 0; l < n; ++l) {
        if (done[l]) continue;
        a[k][l] -= (a[k][bi] * a[bj][l] + a[k][bj] * a[bi][l]) / b;
      }
    }
  }
  return sig;
}

}  // namespace csmm
