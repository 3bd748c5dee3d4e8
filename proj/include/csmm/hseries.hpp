#pragma once

#include <cmath>
#include <map>
#include <string>

#include "csmm/npoly.hpp"

namespace csmm {

// Truncated series in hbar with NPoly coefficients. Exponents live in
// [kMinExponent, order]; products that would fall below the floor are a hard
// error (that floor is a structural property of the series this engine
// produces, so hitting it signals a grading bug upstream).
class HSeries {
 public:
  static constexpr int kMinExponent = -2;

  explicit HSeries(int order) : order_(order) {
    if (order < kMinExponent) throw std::invalid_argument("HSeries: order below exponent floor");
  }

  static HSeries constant(const NPoly& c, int order) {
    HSeries s(order);
    s.set_term(0, c);
    return s;
  }
  static HSeries one(int order) { return constant(NPoly(1), order); }

  int order() const { return order_; }
  bool is_zero() const { return t_.empty(); }

  int min_exponent() const {
    return t_.empty() ? order_ + 1 : t_.begin()->first;
  }

  NPoly term(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? NPoly() : it->second;
  }

  const std::map<int, NPoly>& terms() const { return t_; }

  void set_term(int k, const NPoly& c) {
    check_exponent(k);
    if (k > order_) return;
    if (c.is_zero()) t_.erase(k);
    else t_[k] = c;
  }

  void add_term(int k, const NPoly& c) {
    check_exponent(k);
    if (k > order_ || c.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_[k] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  HSeries& operator+=(const HSeries& o) {
    check_same_order(o);
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
  }
  HSeries& operator-=(const HSeries& o) {
    check_same_order(o);
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
  }
  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
  HSeries operator-() const {
    HSeries r(order_);
    for (const auto& [k, c] : t_) r.t_[k] = -c;
    return r;
  }

  friend HSeries operator*(const HSeries& a, const HSeries& b) {
    a.check_same_order(b);
    HSeries r(a.order_);
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) {
        int k = ka + kb;
        if (k > a.order_) continue;
        r.add_term(k, ca * cb);
      }
    return r;
  }
  HSeries& operator*=(const HSeries& o) { return *this = *this * o; }

  HSeries& operator*=(const NPoly& s) {
    if (s.is_zero()) {
      t_.clear();
      return *this;
    }
    for (auto& [k, c] : t_) c *= s;
    return *this;
  }
  friend HSeries operator*(HSeries a, const NPoly& s) { return a *= s; }
  friend HSeries operator*(const NPoly& s, HSeries a) { return a *= s; }
  HSeries& operator*=(const Rational& s) { return *this *= NPoly(s); }
  friend HSeries operator*(HSeries a, const Rational& s) { return a *= s; }

  // Multiplication by hbar^delta.
  HSeries shifted(int delta) const {
    HSeries r(order_);
    for (const auto& [k, c] : t_) {
      int kk = k + delta;
      check_exponent_static(kk);
      if (kk <= order_) r.t_[kk] = c;
    }
    return r;
  }

  HSeries truncated(int new_order) const {
    if (new_order > order_)
      throw std::invalid_argument("HSeries: cannot extend truncation order");
    HSeries r(new_order);
    for (const auto& [k, c] : t_)
      if (k <= new_order) r.t_[k] = c;
    return r;
  }

  friend bool operator==(const HSeries& a, const HSeries& b) {
    return a.order_ == b.order_ && a.t_ == b.t_;
  }
  friend bool operator!=(const HSeries& a, const HSeries& b) { return !(a == b); }

  // exp(a) with the truncated Taylor sum. Requires min exponent >= 1 so the
  // sum terminates within the truncation order.
  HSeries exp() const {
    if (!t_.empty() && min_exponent() < 1)
      throw std::domain_error("HSeries::exp: argument must have positive minimum exponent");
    HSeries acc = one(order_);
    HSeries pw = one(order_);
    Rational fact(1);
    for (int k = 1; k <= order_; ++k) {
      pw *= *this;
      if (pw.is_zero()) break;
      fact *= Rational(k);
      HSeries t = pw;
      t *= Rational(1) / fact;
      acc += t;
    }
    return acc;
  }

  // log(1 + u) for series with constant term exactly 1 and no negative
  // exponents; Mercator sum truncates at the series order.
  HSeries log() const {
    if (min_exponent() < 0)
      throw std::domain_error("HSeries::log: negative exponents present");
    if (term(0) != NPoly(1))
      throw std::domain_error("HSeries::log: constant term must equal 1");
    HSeries u = *this;
    u.add_term(0, NPoly(-1));
    HSeries acc(order_);
    HSeries pw = one(order_);
    for (int k = 1; k <= order_; ++k) {
      pw *= u;
      if (pw.is_zero()) break;
      HSeries t = pw;
      Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(k);
      t *= c;
      acc += t;
    }
    return acc;
  }

  double eval_double(double n, double hbar) const {
    double acc = 0;
    for (const auto& [k, c] : t_) acc += c.eval_double(n) * std::pow(hbar, k);
    return acc;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")";
      if (k != 0) s += "*h^" + std::to_string(k);
    }
    return s + " + O(h^" + std::to_string(order_ + 1) + ")";
  }

 private:
  static void check_exponent_static(int k) {
    if (k < kMinExponent)
      throw std::domain_error("HSeries: exponent below the hbar^-2 floor (grading bug)");
  }
  void check_exponent(int k) const { check_exponent_static(k); }
  void check_same_order(const HSeries& o) const {
    if (order_ != o.order_)
      throw std::invalid_argument("HSeries: mixed truncation orders; retruncate explicitly");
  }

  int order_;
  std::map<int, NPoly> t_;
};

}  // namespace csmm
