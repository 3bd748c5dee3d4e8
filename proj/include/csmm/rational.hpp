#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace csmm {

// Exact rational scalar. Always kept in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}            // NOLINT: implicit by design
  Rational(int n) : v_(n) {}             // NOLINT
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Accepts "n" or "n/d".
  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
      if (e < 0) throw std::domain_error("Rational: 0 to a negative power");
      return Rational(0);
    }
    mpq_class base = e > 0 ? v_ : mpq_class(1 / v_);
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    r.canonicalize();
    return Rational(r);
  }

  std::string to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  double to_double() const { return v_.get_d(); }

  long double to_long_double() const {
    // Exact num/den division in extended precision while both fit in 64 bits.
    if (mpz_fits_slong_p(v_.get_num_mpz_t()) && mpz_fits_slong_p(v_.get_den_mpz_t())) {
      long double n = static_cast<long double>(mpz_get_si(v_.get_num_mpz_t()));
      long double d = static_cast<long double>(mpz_get_si(v_.get_den_mpz_t()));
      return n / d;
    }
    return static_cast<long double>(v_.get_d());
  }

 private:
  mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

}  // namespace csmm
