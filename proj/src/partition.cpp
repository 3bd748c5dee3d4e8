#include "csmm/partition.hpp"

namespace csmm {

namespace {

void extend(std::vector<Partition>& out, std::vector<int>& stack, int remaining, int max_part) {
  if (remaining == 0) {
    Partition p;
    p.parts = stack;
    out.push_back(std::move(p));
    return;
  }
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    stack.push_back(first);
    extend(out, stack, remaining - first, first);
    stack.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> stack;
  extend(out, stack, n, n == 0 ? 1 : n);
  return out;
}

}  // namespace csmm
