#include "csmm/characters.hpp"

#include <map>
#include <mutex>

namespace csmm {

namespace {

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  Partition p;
  int n = static_cast<int>(beta.size());
  for (int i = 0; i < n; ++i) {
    int part = beta[i] - (n - 1 - i);
    if (part > 0) p.parts.push_back(part);
  }
  return p;
}

std::int64_t mn(const Partition& lambda, const Partition& mu, size_t idx,
                std::map<std::pair<Partition, size_t>, std::int64_t>& memo);

std::int64_t mn_uncached(const Partition& lambda, const Partition& mu, size_t idx,
                         std::map<std::pair<Partition, size_t>, std::int64_t>& memo) {
  if (idx == mu.parts.size()) return lambda.empty() ? 1 : 0;
  int m = mu.parts[idx];
  // Beta-set of lambda: distinct values lambda_i + (n - i), descending.
  int n = lambda.num_parts();
  std::vector<int> beta(n);
  for (int i = 0; i < n; ++i) beta[i] = lambda.parts[i] + (n - 1 - i);

  std::int64_t acc = 0;
  for (int i = 0; i < n; ++i) {
    int target = beta[i] - m;
    if (target < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++height;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::int64_t sub = mn(from_beta(std::move(nb)), mu, idx + 1, memo);
    acc += (height % 2 == 0) ? sub : -sub;
  }
  return acc;
}

std::int64_t mn(const Partition& lambda, const Partition& mu, size_t idx,
                std::map<std::pair<Partition, size_t>, std::int64_t>& memo) {
  auto key = std::make_pair(lambda, idx);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::int64_t v = mn_uncached(lambda, mu, idx, memo);
  memo.emplace(std::move(key), v);
  return v;
}

}  // namespace

std::int64_t sym_character(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("sym_character: weight mismatch");
  static std::mutex cache_mutex;
  static std::map<std::pair<Partition, Partition>, std::int64_t> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({lambda, mu});
    if (it != cache.end()) return it->second;
  }
  std::map<std::pair<Partition, size_t>, std::int64_t> memo;
  std::int64_t v = mn(lambda, mu, 0, memo);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(std::make_pair(lambda, mu), v);
  }
  return v;
}

}  // namespace csmm
