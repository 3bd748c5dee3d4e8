#pragma once

#include <algorithm>
#include <vector>

#include "csmm/rational.hpp"

namespace csmm {

// Integer partition: weakly decreasing positive parts. The empty partition is
// valid. Ordering is weight-first, then reverse-lexicographic on parts, which
// matches the enumeration order of partitions_of.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize(); }
  Partition(std::initializer_list<int> p) : parts(p) { normalize(); }

  void normalize() {
    for (int x : parts)
      if (x < 0) throw std::invalid_argument("Partition: negative part");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
  }

  int weight() const {
    int w = 0;
    for (int x : parts) w += x;
    return w;
  }
  int num_parts() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }

  Partition conjugate() const {
    Partition c;
    if (parts.empty()) return c;
    c.parts.resize(parts[0]);
    for (int j = 0; j < parts[0]; ++j) {
      int cnt = 0;
      for (int x : parts)
        if (x > j) ++cnt;
      c.parts[j] = cnt;
    }
    return c;
  }

  // z_mu = prod_j j^{k_j} k_j! over part multiplicities k_j.
  Rational z() const {
    mpz_class acc(1);
    int run = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
      acc *= parts[i];
      if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
        ++run;
        acc *= run;
      } else {
        run = 1;
      }
    }
    return Rational(acc);
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(a.parts.begin(), a.parts.end(), b.parts.begin(),
                                        b.parts.end(), std::greater<int>());
  }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts[i]);
    }
    return s + "]";
  }

  // Accepts "2,1,1", "[2,1,1]", or "" / "[]" for the empty partition.
  static Partition from_string(const std::string& in) {
    std::string s = in;
    if (!s.empty() && s.front() == '[') s.erase(s.begin());
    if (!s.empty() && s.back() == ']') s.pop_back();
    Partition p;
    size_t pos = 0;
    while (pos < s.size()) {
      size_t comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (!tok.empty()) {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("Partition: bad part '" + tok + "'");
        p.parts.push_back(v);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    p.normalize();
    return p;
  }
};

// All partitions of n in reverse-lexicographic order: [n], [n-1,1], ..., [1^n].
std::vector<Partition> partitions_of(int n);

}  // namespace csmm
