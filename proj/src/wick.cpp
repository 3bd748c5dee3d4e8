#include "csmm/wick.hpp"

#include <mutex>

#include "csmm/characters.hpp"

namespace csmm {
namespace {

// Positions 0..2m-1 carry the trace insertions; sigma is the cyclic successor
// within each trace word.
std::vector<int> trace_successor(const Partition& lambda) {
  std::vector<int> sigma;
  int base = 0;
  for (int part : lambda.parts) {
    for (int i = 0; i < part; ++i) sigma.push_back(base + (i + 1) % part);
    base += part;
  }
  return sigma;
}

int cycles_of(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    for (int cur = s; !seen[cur]; cur = perm[cur]) seen[cur] = true;
  }
  return count;
}

// Depth-first over perfect matchings; at each leaf tallies the loop count of
// the glued permutation sigma∘pi.
void enumerate(const std::vector<int>& sigma, std::vector<int>& pi, std::vector<bool>& used,
               std::map<int, std::uint64_t>& hist) {
  const int n = static_cast<int>(pi.size());
  int a = -1;
  for (int i = 0; i < n; ++i) {
    if (!used[i]) {
      a = i;
      break;
    }
  }
  if (a < 0) {
    std::vector<int> glued(n);
    for (int i = 0; i < n; ++i) glued[i] = pi[sigma[i]];
    ++hist[cycles_of(glued)];
    return;
  }
  used[a] = true;
  for (int b = a + 1; b < n; ++b) {
    if (used[b]) continue;
    used[b] = true;
    pi[a] = b;
    pi[b] = a;
    enumerate(sigma, pi, used, hist);
    used[b] = false;
  }
  used[a] = false;
}

NPoly hist_to_poly(const std::map<int, std::uint64_t>& hist) {
  NPoly out;
  for (const auto& [loops, tally] : hist)
    out += NPoly::monomial(loops, Rational(static_cast<long>(tally)));
  return out;
}

NPoly moment_serial(const Partition& lambda) {
  if (lambda.weight() % 2 != 0) return NPoly();
  if (lambda.weight() == 0) return NPoly(1);
  const auto sigma = trace_successor(lambda);
  const int n = static_cast<int>(sigma.size());
  std::vector<int> pi(n, -1);
  std::vector<bool> used(n, false);
  std::map<int, std::uint64_t> hist;
  enumerate(sigma, pi, used, hist);
  return hist_to_poly(hist);
}

NPoly moment_parallel(const Partition& lambda) {
  if (lambda.weight() % 2 != 0) return NPoly();
  if (lambda.weight() == 0) return NPoly(1);
  const auto sigma = trace_successor(lambda);
  const int n = static_cast<int>(sigma.size());
  std::vector<std::map<int, std::uint64_t>> branch(n - 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int b = 1; b < n; ++b) {
    std::vector<int> pi(n, -1);
    std::vector<bool> used(n, false);
    used[0] = used[b] = true;
    pi[0] = b;
    pi[b] = 0;
    enumerate(sigma, pi, used, branch[b - 1]);
  }
  std::map<int, std::uint64_t> hist;
  for (const auto& h : branch)
    for (const auto& [loops, tally] : h) hist[loops] += tally;
  return hist_to_poly(hist);
}

std::map<Partition, NPoly>& memo() {
  static std::map<Partition, NPoly> m;
  return m;
}
std::mutex memo_mutex;

}  // namespace

NPoly gauss_moment(const Partition& lambda, bool parallel) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo().find(lambda);
    if (it != memo().end()) return it->second;
  }
  NPoly value = parallel ? moment_parallel(lambda) : moment_serial(lambda);
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo().emplace(lambda, value);
  return value;
}

NPoly gauss_moment_reference(const Partition& lambda) { return moment_serial(lambda); }

NPoly gauss_moment_multicolor(const std::vector<Partition>& key) {
  NPoly out(1);
  for (const auto& lambda : key) {
    out *= gauss_moment(lambda);
    if (out.is_zero()) return out;
  }
  return out;
}

HSeries gauss_integrate(const SymFunc& f, HbarConvention conv) {
  HSeries out(f.order());
  for (const auto& [key, coeff] : f.terms()) {
    const NPoly moment = gauss_moment_multicolor(key);
    if (moment.is_zero()) continue;
    HSeries term = coeff * moment;
    if (conv == HbarConvention::kEulerGraded) {
      const int w = SymFunc::key_weight(key);
      term = term.shifted(-w / 2);
    }
    out += term;
  }
  return out;
}

NPoly schur_expectation(const Partition& lambda) {
  NPoly out;
  for (const auto& mu : partitions_of(lambda.weight())) {
    const std::int64_t chi = sym_character(lambda, mu);
    if (chi == 0) continue;
    out += gauss_moment(mu) * (Rational(chi) / mu.z());
  }
  return out;
}

NPoly harer_zagier(int m) {
  if (m < 0) throw std::invalid_argument("harer_zagier: m must be nonnegative");
  NPoly n = NPoly::variable();
  NPoly prev = n;      // m = 0: tr M^0 = N
  if (m == 0) return prev;
  NPoly cur = n * n;   // m = 1
  for (int k = 1; k < m; ++k) {
    NPoly next = n * cur * Rational(4 * k + 2) + prev * Rational(k * (4 * k * k - 1));
    next *= Rational(1, k + 2);
    prev = cur;
    cur = next;
  }
  return cur;
}

HSeries free_energy(const HSeries& z) { return z.log(); }

}  // namespace csmm
