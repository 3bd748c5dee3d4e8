#include "csmm/wrt_su2.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace csmm {
namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

}  // namespace

SL2Z complete_sl2z(long long p, long long q) {
  if (q == 0) throw std::invalid_argument("complete_sl2z: q must be nonzero");
  if (std::gcd(std::abs(p), std::abs(q)) != 1)
    throw std::invalid_argument("complete_sl2z: p and q must be coprime");
  // Extended Euclid on (p, q): find s0, r0 with p s0 - q r0 = 1.
  long long old_r = p, r = q;
  long long old_x = 1, x = 0;
  long long old_y = 0, y = 1;
  while (r != 0) {
    const long long quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_x, x) = std::make_pair(x, old_x - quot * x);
    std::tie(old_y, y) = std::make_pair(y, old_y - quot * y);
  }
  // old_x * p + old_y * q = old_r = +-1.
  long long s0 = old_x, r0 = -old_y;
  if (old_r == -1) {
    s0 = -s0;
    r0 = -r0;
  }
  // General solution r0 + t p, s0 + t q; minimize |r|.
  SL2Z best;
  bool have = false;
  if (p == 0) {
    best = {p, r0, q, s0};
  } else {
    const long long t0 = -r0 / p;
    for (long long t = t0 - 2; t <= t0 + 2; ++t) {
      SL2Z cand{p, r0 + t * p, q, s0 + t * q};
      if (!have || std::abs(cand.r) < std::abs(best.r) ||
          (std::abs(cand.r) == std::abs(best.r) && cand.r > best.r)) {
        best = cand;
        have = true;
      }
    }
  }
  best.validate();
  return best;
}

Complex u_matrix_element_su2(const SL2Z& u, int alpha, int beta, int l) {
  u.validate();
  if (u.q == 0) throw std::invalid_argument("u_matrix_element_su2: q must be nonzero");
  if (l < 3) throw std::invalid_argument("u_matrix_element_su2: need l >= 3");
  if (alpha < 1 || alpha >= l || beta < 1 || beta >= l)
    throw std::invalid_argument("u_matrix_element_su2: weight outside the fundamental chamber");

  const long long absq = std::abs(u.q);
  const long double phi = rademacher_phi(u).to_long_double();
  // [i sign(q)] / sqrt(2 l |q|) * exp(-i pi d/12 Phi), d = 3.
  const Complex unit(0.0L, u.q > 0 ? 1.0L : -1.0L);
  const Complex pref = unit / std::sqrt(2.0L * l * absq) *
                       std::exp(Complex(0.0L, -kPi / 4.0L * phi));

  // Weights alpha = a rho with rho^2 = 1/2; root lattice points n = 2 nu rho.
  Complex sum = 0;
  const long double a = alpha, b = beta;
  for (long long nu = 0; nu < absq; ++nu) {
    for (int w = 1; w >= -1; w -= 2) {
      const long double bracket = u.p * a * a / 2.0L - 2.0L * a * l * nu - w * a * b +
                                  u.s * (2.0L * l * l * nu * nu + 2.0L * l * nu * w * b + b * b / 2.0L);
      sum += static_cast<long double>(w) * std::exp(Complex(0.0L, kPi / (l * u.q) * bracket));
    }
  }
  return pref * sum;
}

WrtResult wrt_lens_su2(long long p, long long q, int k) {
  return wrt_lens_su2(p, q, k, complete_sl2z(p, q));
}

WrtResult wrt_lens_su2(long long p, long long q, int k, const SL2Z& completion) {
  if (p < 1) throw std::invalid_argument("wrt_lens_su2: p must be >= 1");
  if (k < 1) throw std::invalid_argument("wrt_lens_su2: k must be >= 1");
  completion.validate();
  if (completion.p != p || completion.q != q)
    throw std::invalid_argument("wrt_lens_su2: completion does not extend p/q");
  const int l = k + 2;
  WrtResult res;
  res.u = completion;
  const int sigma = linking_signature({{Rational(p, q)}});
  const long double phi = rademacher_phi(res.u).to_long_double();
  res.framing_phase = kPi * k * 3.0L / (12.0L * l) * (phi - 3.0L * sigma);

  Complex sum = 0;
  for (int a = 1; a < l; ++a) {
    const long double s_rho_a = std::sqrt(2.0L / l) * std::sin(kPi * a / l);
    sum += s_rho_a * u_matrix_element_su2(res.u, a, 1, l);
  }
  res.z = std::exp(Complex(0.0L, res.framing_phase)) * sum;
  return res;
}

}  // namespace csmm
