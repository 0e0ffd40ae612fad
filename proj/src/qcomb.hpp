#pragma once

#include "laurent.hpp"
#include "qvec.hpp"

namespace qrr {

struct QBinomialArgs {
  int64_t a = 0;
  int64_t b = 0;
  int64_t base_step = 1; // 1 for base q, 2 for base q^2
};

// Gaussian binomial [A, B]_q in base q; zero polynomial outside 0 <= B <= A.
// Backed by a memoized Pascal table safe for concurrent read/insert; the
// returned reference stays valid for the lifetime of the process.
const QVec& gaussian_binomial_q(int64_t a, int64_t b);

// base q^k via exponent scaling of the base-q value
QVec gaussian_binomial_vec(int64_t a, int64_t b, int64_t k);
QVec gaussian_binomial_star_vec(int64_t a, int64_t b, int64_t k);

LaurentPolynomial gaussian_binomial(const QBinomialArgs& args);
// the modified binomial: 1 when A = -1 and B = 0, otherwise the standard one
LaurentPolynomial gaussian_binomial_star(const QBinomialArgs& args);

// (A; q^k)_j with A = z^{a_z} q^{a_q}: the finite product
// prod_{i=0}^{j-1} (1 - z^{a_z} q^{a_q + k i})
LaurentPolynomial rising_q_factorial(int64_t a_z, int64_t a_q, int64_t j, int64_t k);

// the same value expanded by the q-binomial theorem:
// sum_{h=0}^{j} (-1)^h t^h q^{k h(h-1)/2} [j, h]_{q^k}
LaurentPolynomial pochhammer_expansion_qbt1(int64_t a_z, int64_t a_q, int64_t j, int64_t k);

// coefficient of t^h in 1/(t; q^k)_j, i.e. [h+j-1, h]*_{q^k}
LaurentPolynomial inverse_pochhammer_coefficient(int64_t h, int64_t j, int64_t k);

// Andrews-Baxter trinomial analog
// T0(L, A) = sum_{r=0}^{L} (-1)^r [L, r]_{q^2} [2L-2r, L-A-r]_q ;
// empty sum (zero) for L < 0. Memoized; symmetric in A <-> -A.
const QVec& trinomial_t0_vec(int64_t L, int64_t A);
LaurentPolynomial trinomial_t0(int64_t L, int64_t A);

// Andrews' z-generalized binomial with monomial argument
// zeta = z^{zeta_z} q^{zeta_q}:
//   0                                        if B < 0
//   1                                        if B = 0 or B = A
//   sum_{h=0}^{B} zeta^h [A-B+h-1, h]_q      if 0 < B < A
//   (zeta q^{A-B}; q)_{B-A}                  if B > A
LaurentPolynomial andrews_z_binomial(int64_t a, int64_t b, int64_t zeta_z, int64_t zeta_q);

// builds the Pascal table up to row max_a; call before concurrent reads
void prewarm_binomials(int64_t max_a);

} // namespace qrr
