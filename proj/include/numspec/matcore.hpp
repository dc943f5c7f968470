#pragma once

#include "numspec/types.hpp"

#include <optional>
#include <vector>

namespace numspec {

// ||x|| in the given norm. Exactly zero iff x = 0.
double vec_norm(const CVector& x, const NormSpec& norm);

// Euclidean-pairing gradient of x -> ||x||_norm at x != 0: the vector g with
// d||x + e|| = Re <e, g> + o(e) under the sesquilinear pairing sum e_k
// conj(g_k). For p in {1, inf} and renormed norms this is a subgradient
// (a canonical selection where multivalued).
CVector norm_gradient(const CVector& x, const NormSpec& norm);

// One duality witness j(x): <x, j(x)> = ||x||^2 = ||j(x)||_q^2 under the
// bilinear pairing <y, f> = sum_k y_k f_k. For 1 < p < inf this is the unique
// j(x)_k = ||x||^{2-p} |x_k|^{p-2} conj(x_k); for p = 1 the sign-pattern
// selection (zero off the support), for p = inf mass on the first
// maximal-modulus coordinate. lp norms only.
CVector dual_witness(const CVector& x, const NormSpec& norm);

struct OpNormResult {
  double value = 0.0;          // certified lower bound; exact for p in {1,2,inf}
  CVector witness;             // unit vector with ||A witness|| ~= value
  double residual = 0.0;       // stationarity diagnostic for iterative paths
  bool converged = true;
};

// Induced operator norm. Closed forms for p = 1 (max column absolute sum),
// p = inf (max row absolute sum), p = 2 (largest singular value); other p via
// a Boyd-type power iteration with restarts, renormed norms via subgradient
// ascent. Iterative paths return the best value found as a lower bound.
OpNormResult op_norm(const CMatrix& a, const NormSpec& norm,
                     std::uint64_t seed = 0, int restarts = 16);
double op_norm_value(const CMatrix& a, const NormSpec& norm,
                     std::uint64_t seed = 0, int restarts = 16);

// e^{tA} by scaling and squaring with a diagonal Pade approximant.
CMatrix mat_exp(const CMatrix& a, double t);

// Eigenvalues with multiplicity (dense Schur-based solver; unsorted).
std::vector<Complex> eigenvalues(const CMatrix& a);

double spectral_abscissa(const CMatrix& a);

// ||(lambda - A)^{-1}|| in the given norm. Throws SingularityError when
// lambda is within 1e-10 (1 + |lambda|) of an eigenvalue; pass a precomputed
// spectrum to skip the eigensolve.
double resolvent_norm(const CMatrix& a, Complex lambda, const NormSpec& norm,
                      const std::vector<Complex>* spectrum = nullptr);

}  // namespace numspec
