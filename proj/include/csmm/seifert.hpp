#pragma once

#include "csmm/arith.hpp"
#include "csmm/symfunc.hpp"

namespace csmm {

// Coefficients b_{2m} of (1/2) log(sinh(x/2)/(x/2)) = sum_{m>=1} b_{2m} x^{2m}.
// Entry [m] holds b_{2m}; entry [0] is 0.
std::vector<Rational> omega_coeffs(int max_m);

// One-color power-sum image of the surgery potential
// Omega^{2-n}_{x/sqrt(e0)} prod_l Omega_{x/(sqrt(e0) p_l)}, truncated:
// exp( sum_m b_{2m} e0^{-m} [(2-n) + sum_l p_l^{-2m}] (Phi Psi)(w_{2m}) ).
SymFunc seifert_potential(const SeifertData& d, int order);

// Gaussian integral of the potential alone (the prefactor-stripped series
// compared against eigenvalue quadrature).
HSeries lmo_seifert_reduced(const SeifertData& d, int order);

// Full perturbative partition function: exp(phi/48 * theta * hbar^2) times the
// integrated potential, with theta = 2(N^3 - N) read off the closed 2-wheel.
HSeries lmo_seifert_partition(const SeifertData& d, int order);

// log of the partition function (connected diagrams).
HSeries lmo_seifert_free_energy(const SeifertData& d, int order);

}  // namespace csmm
