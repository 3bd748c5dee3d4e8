#pragma once

#include <complex>

#include "csmm/arith.hpp"

namespace csmm {

using Complex = std::complex<long double>;

// Extends a surgery coefficient p/q to an SL(2,Z) matrix [[p,r],[q,s]] with
// ps - qr = 1 and |r| minimal (ties resolved toward positive r).
SL2Z complete_sl2z(long long p, long long q);

// Level-l representation matrix element of U acting on the SU(2) integrable
// weights, alpha and beta in the fundamental chamber {1, ..., l-1}; the Weyl
// sum and the Gauss sum over Z_|q| evaluated directly. Requires q != 0.
Complex u_matrix_element_su2(const SL2Z& u, int alpha, int beta, int l);

struct WrtResult {
  Complex z;
  long double framing_phase = 0;  // phi_fr
  SL2Z u;                         // the completed surgery matrix
};

// WRT invariant of the lens space L(p,q) = X(q/p) at level k (l = k + 2),
// normalized so that surgery on the +1-framed unknot returns
// Z(S^3) = sqrt(2/l) sin(pi/l).
WrtResult wrt_lens_su2(long long p, long long q, int k);

// Same invariant computed from an explicitly chosen completion of p/q to an
// SL(2,Z) matrix (completion.p == p, completion.q == q required). The value
// is independent of that choice; exposing it makes the independence testable.
WrtResult wrt_lens_su2(long long p, long long q, int k, const SL2Z& completion);

}  // namespace csmm
