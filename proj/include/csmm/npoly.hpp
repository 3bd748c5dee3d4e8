#pragma once

#include <map>
#include <string>

#include "csmm/rational.hpp"

namespace csmm {

// Polynomial in the formal rank variable N with exact rational coefficients.
// Sparse representation; zero coefficients are never stored.
class NPoly {
 public:
  NPoly() = default;
  NPoly(const Rational& c) {  // NOLINT: implicit by design
    if (!c.is_zero()) c_[0] = c;
  }
  NPoly(long c) : NPoly(Rational(c)) {}  // NOLINT
  NPoly(int c) : NPoly(Rational(c)) {}   // NOLINT

  static NPoly monomial(int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("NPoly: negative degree");
    NPoly p;
    if (!c.is_zero()) p.c_[degree] = c;
    return p;
  }
  static NPoly variable() { return monomial(1, Rational(1)); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  Rational constant_term() const { return coeff(0); }
  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

  Rational coeff(int degree) const {
    auto it = c_.find(degree);
    return it == c_.end() ? Rational(0) : it->second;
  }

  const std::map<int, Rational>& terms() const { return c_; }

  NPoly& operator+=(const NPoly& o) {
    for (const auto& [d, c] : o.c_) add_term(d, c);
    return *this;
  }
  NPoly& operator-=(const NPoly& o) {
    for (const auto& [d, c] : o.c_) add_term(d, -c);
    return *this;
  }
  friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
  friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
  NPoly operator-() const {
    NPoly r;
    for (const auto& [d, c] : c_) r.c_[d] = -c;
    return r;
  }

  friend NPoly operator*(const NPoly& a, const NPoly& b) {
    NPoly r;
    for (const auto& [da, ca] : a.c_)
      for (const auto& [db, cb] : b.c_) r.add_term(da + db, ca * cb);
    return r;
  }
  NPoly& operator*=(const NPoly& o) { return *this = *this * o; }

  NPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& [d, c] : c_) c *= s;
    return *this;
  }
  friend NPoly operator*(NPoly a, const Rational& s) { return a *= s; }
  friend NPoly operator*(const Rational& s, NPoly a) { return a *= s; }

  NPoly pow(unsigned e) const {
    NPoly r(1);
    NPoly base = *this;
    for (unsigned k = e; k > 0; k >>= 1) {
      if (k & 1u) r *= base;
      if (k > 1) base *= base;
    }
    return r;
  }

  friend bool operator==(const NPoly& a, const NPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const NPoly& a, const NPoly& b) { return !(a == b); }
  friend bool operator<(const NPoly& a, const NPoly& b) { return a.c_ < b.c_; }

  // Evaluation at an integer rank.
  Rational eval(long n) const {
    Rational acc(0);
    Rational x(n);
    // Horner over the dense span is wasteful for sparse data; walk terms directly.
    for (const auto& [d, c] : c_) acc += c * x.pow(d);
    return acc;
  }

  double eval_double(double n) const {
    double acc = 0;
    for (const auto& [d, c] : c_) {
      double t = c.to_double();
      for (int k = 0; k < d; ++k) t *= n;
      acc += t;
    }
    return acc;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      const auto& [d, c] = *it;
      if (!s.empty()) s += c.sign() >= 0 ? " + " : " - ";
      else if (c.sign() < 0) s += "-";
      Rational a = c.abs();
      bool unit = a.is_one() && d > 0;
      if (!unit) s += a.to_string();
      if (d > 0) {
        if (!unit) s += "*";
        s += "N";
        if (d > 1) s += "^" + std::to_string(d);
      }
    }
    return s;
  }

 private:
  void add_term(int d, const Rational& c) {
    auto it = c_.find(d);
    if (it == c_.end()) {
      if (!c.is_zero()) c_[d] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  std::map<int, Rational> c_;
};

}  // namespace csmm
