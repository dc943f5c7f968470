#pragma once

#include "numspec/matcore.hpp"

#include <optional>
#include <vector>

namespace numspec {

// One estimate of the growth bound mu(A) in a fixed norm: the least omega
// with ||e^{tA}|| <= e^{t omega} for all t >= 0.
struct LogNormResult {
  enum class Method { closed, quotient, duality };

  double value = 0.0;
  Method method = Method::closed;
  std::optional<CVector> witness;        // unit vector attaining/approaching the sup
  std::optional<Complex> witness_pairing;  // <A x*, j(x*)> for some j in the duality set
  double residual = 0.0;                 // convergence diagnostic; bounds
                                         // |Re(witness_pairing) - value| when both present
};

// Classical closed forms: p = 2 -> lambda_max((A + A^H)/2); p = 1 -> max over
// columns of Re a_kk + sum_{i != k} |a_ik|; p = inf -> the row version.
LogNormResult lognorm_closed(const CMatrix& a, double p);

// Difference quotient (||I + hA|| - 1)/h on the halving schedule h = 2^{-k},
// k <= 40, stopping when successive quotients differ by < 1e-7 (1e-4 for
// renormed norms). The quotient decreases in h, so the result is an upper
// bound with residual = last decrement.
LogNormResult lognorm_quotient(const CMatrix& a, const NormSpec& norm,
                               std::uint64_t seed = 0);

// sup over the unit sphere of Re <Ax, j(x)>: ascent on the p-sphere for
// 1 < p < inf, exact extreme-point enumeration for p in {1, inf} when
// n <= 8 and random sampling beyond.
LogNormResult lognorm_duality(const CMatrix& a, const NormSpec& norm,
                              std::uint64_t seed = 0, int restarts = 16);

// Pairing values <A x_i, j(x_i)> for unit x_i: `count` random directions.
// For p in {1, inf} the free dual components are sampled from the extreme
// points of the duality set. Deterministic under seed.
std::vector<Complex> sample_numrange(const CMatrix& a, const NormSpec& norm,
                                     int count, std::uint64_t seed = 0);

// <Ax, j(x)> for the canonical duality witness of x (x need not be unit).
Complex pairing_value(const CMatrix& a, const CVector& x, const NormSpec& norm);

}  // namespace numspec
