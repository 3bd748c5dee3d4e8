#pragma once

#include <vector>

#include "csmm/hseries.hpp"
#include "csmm/partition.hpp"

namespace csmm {

// Element of the power-sum algebra in r colors with HSeries coefficients.
// A term is keyed by an r-tuple of partitions: the tuple (mu_1,...,mu_r)
// stands for prod_c p_{mu_c}(color c). p_0 is normalized to the rank N at
// insertion time, so stored partitions never contain zero parts. Keys are
// ordered lexicographically across colors with the partition order
// (weight-first, reverse-lex) inside each color.
class SymFunc {
 public:
  using Key = std::vector<Partition>;

  SymFunc(int colors, int order) : colors_(colors), order_(order) {
    if (colors < 0) throw std::invalid_argument("SymFunc: negative color count");
  }

  static SymFunc one(int colors, int order) {
    SymFunc f(colors, order);
    f.add_term(Key(colors), HSeries::one(order));
    return f;
  }

  int colors() const { return colors_; }
  int order() const { return order_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Key, HSeries>& terms() const { return t_; }

  HSeries coeff(const Key& key) const;

  // Inserts coeff * prod p_{key}; zero parts inside key turn into factors of N.
  void add_term(Key key, HSeries coeff);

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }

  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

  SymFunc& scale(const HSeries& s);
  SymFunc& scale(const NPoly& s);
  SymFunc& scale(const Rational& s);

  // p_lambda(color) -> factor^{|lambda(color)|} p_lambda(color).
  SymFunc substituted_scale(int color, const Rational& factor) const;

  // Truncated exponential; every coefficient of the argument must have
  // positive minimum hbar exponent so the Taylor sum terminates.
  SymFunc exp() const;

  // String-coupling membership: every hbar exponent k of the coefficient of a
  // monomial of total weight w must satisfy k >= w - 2.
  bool is_stringp_valid() const;

  static int key_weight(const Key& key) {
    int w = 0;
    for (const auto& p : key) w += p.weight();
    return w;
  }

  std::string to_string() const;

 private:
  void check_compatible(const SymFunc& o) const {
    if (colors_ != o.colors_ || order_ != o.order_)
      throw std::invalid_argument("SymFunc: mixed colors or truncation orders");
  }

  int colors_;
  int order_;
  std::map<Key, HSeries> t_;
};

// s_lambda = sum_mu chi^lambda(mu)/z_mu p_mu, as a one-color SymFunc.
SymFunc schur_to_powersum(const Partition& lambda, int order);

// p_mu = sum_lambda chi^lambda(mu) s_lambda; returns the coefficient map.
std::map<Partition, Rational> powersum_to_schur(const Partition& mu);

}  // namespace csmm
