#pragma once

#include "csmm/symfunc.hpp"

namespace csmm {

// Exact Gaussian expectation <prod_j tr M^{lambda_j}> for a Hermitian matrix
// with propagator <M_ij M_kl> = delta_il delta_jk: sum over Wick matchings of
// the trace insertions, each contributing N^{#loops}. Results are memoized by
// partition. `parallel` selects the branch-split OpenMP kernel; the serial
// path enumerates matchings in one thread and is the reference.
NPoly gauss_moment(const Partition& lambda, bool parallel = true);
NPoly gauss_moment_reference(const Partition& lambda);

// Independent matrices per color: the joint moment factorizes.
NPoly gauss_moment_multicolor(const std::vector<Partition>& key);

// How integration assigns hbar weight to the integrated monomial.
enum class HbarConvention {
  kKeepMonomial,  // moment replaces the monomial, hbar factors untouched
  kEulerGraded,   // extra hbar^{-|key|/2}, grading by the glued Euler class
};

// Termwise Gaussian integration of a power-sum series.
HSeries gauss_integrate(const SymFunc& f, HbarConvention conv = HbarConvention::kKeepMonomial);

// Expectation of a Schur polynomial, via the character expansion into power sums.
NPoly schur_expectation(const Partition& lambda);

// <tr M^{2m}> by the Harer-Zagier three-term recursion; independent of the
// Wick enumeration, used as an oracle against gauss_moment((2m)).
NPoly harer_zagier(int m);

// Connected generating series: log of a unit-leading-term partition function.
HSeries free_energy(const HSeries& z);

}  // namespace csmm
