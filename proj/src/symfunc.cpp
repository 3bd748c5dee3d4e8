#include "csmm/symfunc.hpp"

#include "csmm/characters.hpp"

namespace csmm {

HSeries SymFunc::coeff(const Key& key) const {
  Key k = key;
  if (static_cast<int>(k.size()) != colors_) throw std::invalid_argument("SymFunc: key arity mismatch");
  for (auto& p : k) p.normalize();
  auto it = t_.find(k);
  return it == t_.end() ? HSeries(order_) : it->second;
}

void SymFunc::add_term(Key key, HSeries coeff) {
  if (static_cast<int>(key.size()) != colors_)
    throw std::invalid_argument("SymFunc: key arity mismatch");
  if (coeff.order() != order_) throw std::invalid_argument("SymFunc: coefficient order mismatch");
  int zero_parts = 0;
  for (auto& p : key) {
    for (int x : p.parts) {
      if (x < 0) throw std::invalid_argument("SymFunc: negative part");
      if (x == 0) ++zero_parts;
    }
    p.normalize();
  }
  if (zero_parts > 0) coeff *= NPoly::variable().pow(zero_parts);
  if (coeff.is_zero()) return;
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(std::move(key), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second.is_zero()) t_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  a.check_compatible(b);
  SymFunc r(a.colors_, a.order_);
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      HSeries c = ca * cb;
      if (c.is_zero()) continue;
      SymFunc::Key k(a.colors_);
      for (int col = 0; col < a.colors_; ++col) {
        k[col].parts = ka[col].parts;
        k[col].parts.insert(k[col].parts.end(), kb[col].parts.begin(), kb[col].parts.end());
        k[col].normalize();
      }
      r.add_term(std::move(k), std::move(c));
    }
  return r;
}

SymFunc& SymFunc::scale(const HSeries& s) {
  SymFunc r(colors_, order_);
  for (const auto& [k, c] : t_) r.add_term(k, c * s);
  return *this = std::move(r);
}

SymFunc& SymFunc::scale(const NPoly& s) {
  SymFunc r(colors_, order_);
  for (const auto& [k, c] : t_) r.add_term(k, c * s);
  return *this = std::move(r);
}

SymFunc& SymFunc::scale(const Rational& s) { return scale(NPoly(s)); }

SymFunc SymFunc::substituted_scale(int color, const Rational& factor) const {
  if (color < 0 || color >= colors_) throw std::invalid_argument("SymFunc: bad color index");
  SymFunc r(colors_, order_);
  for (const auto& [k, c] : t_) {
    HSeries cc = c * factor.pow(k[color].weight());
    r.add_term(k, std::move(cc));
  }
  return r;
}

SymFunc SymFunc::exp() const {
  for (const auto& [k, c] : t_)
    if (c.min_exponent() < 1)
      throw std::domain_error("SymFunc::exp: argument must have positive minimum hbar exponent");
  SymFunc acc = one(colors_, order_);
  SymFunc pw = one(colors_, order_);
  Rational fact(1);
  for (int k = 1; k <= order_; ++k) {
    pw *= *this;
    if (pw.is_zero()) break;
    fact *= Rational(k);
    SymFunc t = pw;
    t.scale(Rational(1) / fact);
    acc += t;
  }
  return acc;
}

bool SymFunc::is_stringp_valid() const {
  for (const auto& [k, c] : t_) {
    int w = key_weight(k);
    if (c.min_exponent() < w - 2) return false;
  }
  return true;
}

std::string SymFunc::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : t_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    for (int col = 0; col < colors_; ++col)
      for (int part : k[col].parts)
        s += " p" + std::to_string(part) + (colors_ > 1 ? "(" + std::to_string(col) + ")" : "");
  }
  return s;
}

SymFunc schur_to_powersum(const Partition& lambda, int order) {
  SymFunc f(1, order);
  int w = lambda.weight();
  for (const auto& mu : partitions_of(w)) {
    std::int64_t chi = sym_character(lambda, mu);
    if (chi == 0) continue;
    Rational c = Rational(static_cast<long>(chi)) / mu.z();
    f.add_term({mu}, HSeries::constant(NPoly(c), order));
  }
  return f;
}

std::map<Partition, Rational> powersum_to_schur(const Partition& mu) {
  std::map<Partition, Rational> out;
  for (const auto& lambda : partitions_of(mu.weight())) {
    std::int64_t chi = sym_character(lambda, mu);
    if (chi != 0) out[lambda] = Rational(static_cast<long>(chi));
  }
  return out;
}

}  // namespace csmm
