#pragma once

// Internals shared between translation units; not part of the public API.

#include "numspec/matcore.hpp"

#include <random>

namespace numspec::detail {

double lp_norm(const CVector& x, double p);
Complex signed_power(Complex z, double e);  // |z|^e * phase(z)
CVector random_complex_vector(Eigen::Index n, std::mt19937_64& rng);
double max_col_abs_sum(const CMatrix& a);
double max_row_abs_sum(const CMatrix& a);

// op_norm with an optional warm start and iteration budget; used by the
// difference-quotient schedule, where consecutive levels share maximizers.
OpNormResult op_norm_warm(const CMatrix& a, const NormSpec& norm,
                          std::uint64_t seed, int restarts, int max_iters,
                          const CVector* warm);

}  // namespace numspec::detail
