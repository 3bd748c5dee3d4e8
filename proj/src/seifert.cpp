#include "csmm/seifert.hpp"

#include "csmm/diagram.hpp"
#include "csmm/wick.hpp"

namespace csmm {

std::vector<Rational> omega_coeffs(int max_m) {
  if (max_m < 1) throw std::invalid_argument("omega_coeffs: max_m must be >= 1");
  // u(x) = sinh(x/2)/(x/2) - 1 = sum_{k>=1} x^{2k} / (4^k (2k+1)!), indexed by
  // the power of x^2 below.
  std::vector<Rational> u(max_m + 1, Rational(0));
  Rational term(1);
  for (int k = 1; k <= max_m; ++k) {
    term /= Rational(4 * 2 * k * (2 * k + 1));
    u[k] = term;
  }
  // (1/2) log(1 + u), truncated at x^{2 max_m}.
  std::vector<Rational> acc(max_m + 1, Rational(0));
  std::vector<Rational> pw(max_m + 1, Rational(0));
  pw[0] = Rational(1);
  for (int j = 1; j <= max_m; ++j) {
    std::vector<Rational> next(max_m + 1, Rational(0));
    for (int a = 0; a <= max_m; ++a) {
      if (pw[a] == Rational(0)) continue;
      for (int b = 1; a + b <= max_m; ++b) next[a + b] += pw[a] * u[b];
    }
    pw = std::move(next);
    const Rational c = Rational(j % 2 == 1 ? 1 : -1, 2 * j);
    for (int k = 1; k <= max_m; ++k) acc[k] += pw[k] * c;
  }
  return acc;
}

SymFunc seifert_potential(const SeifertData& d, int order) {
  if (order < 0) throw std::invalid_argument("seifert_potential: negative order");
  const int n = d.n();
  const int max_m = order / 2;
  SymFunc log_pot(1, order);
  if (max_m >= 1) {
    const auto b = omega_coeffs(max_m);
    const Rational e0_inv = Rational(d.big_p, d.h);
    for (int m = 1; m <= max_m; ++m) {
      const SymFunc img = phi(psi(JacobiDiagram::wheel(2 * m)), 1, order);
      SymFunc term(1, order);
      term += img;
      term.scale(Rational(2 - n));
      for (const auto& [p, q] : d.pairs) term += img.substituted_scale(0, Rational(1, p));
      term.scale(b[m] * e0_inv.pow(m));
      log_pot += term;
    }
  }
  return log_pot.exp();
}

namespace {

// N-polynomial value of the closed 2-wheel (the theta graph) through the
// surface pipeline.
NPoly theta_weight() {
  const SymFunc img = phi(psi(JacobiDiagram::theta()), 1, 2);
  NPoly out;
  for (const auto& [key, coeff] : img.terms()) {
    if (SymFunc::key_weight(key) != 0)
      throw std::logic_error("theta_weight: closed diagram produced marked circles");
    out += coeff.term(1);
  }
  return out;
}

}  // namespace

HSeries lmo_seifert_reduced(const SeifertData& d, int order) {
  return gauss_integrate(seifert_potential(d, order), HbarConvention::kKeepMonomial);
}

HSeries lmo_seifert_partition(const SeifertData& d, int order) {
  HSeries arg(order);
  arg.set_term(2, theta_weight() * (d.phi / Rational(48)));
  return arg.exp() * lmo_seifert_reduced(d, order);
}

HSeries lmo_seifert_free_energy(const SeifertData& d, int order) {
  return free_energy(lmo_seifert_partition(d, order));
}

}  // namespace csmm
