#pragma once

#include <vector>

#include "csmm/arith.hpp"

namespace csmm {

// Gauss-Hermite rule for weight e^{-t^2} on the real line; nodes ascending.
struct GaussHermiteRule {
  std::vector<long double> nodes;
  std::vector<long double> weights;
};

GaussHermiteRule gauss_hermite_rule(int q);

struct QuadratureOptions {
  double rel_tol = 1e-10;
  int min_nodes = 16;
  int max_nodes = 512;
  long long max_evals = 200000000;
  bool parallel = true;
};

// Normalized eigenvalue integral
//   < prod_{i<j} sinhc(g d_ij / 2)^{2-n} prod_l sinhc(g d_ij / (2 p_l)) * e^{-t.x} >
// over the measure e^{-sum x_i^2 / 2} Delta^2(x), with d_ij = x_i - x_j and
// sinhc(z) = sinh(z)/z; both numerator and denominator use the same grid.
// Matches the perturbative series at g = hbar / sqrt(e0). Node counts double
// until the relative change is below rel_tol; hitting a cap is an error.
// `rel_change_out`, when given, receives the relative change across the last
// node doubling (an a posteriori error estimate).
double seifert_integral_numeric(const SeifertData& d, int n_eigen, double g,
                                const std::vector<double>& t_shift = {},
                                const QuadratureOptions& opt = {},
                                double* rel_change_out = nullptr);

}  // namespace csmm
