#pragma once

#include "numspec/lognorm.hpp"

#include <vector>

namespace numspec {

// t -> ||e^{t e^{-i theta} A}|| on a positive grid.
struct NormCurve {
  double theta = 0.0;
  std::vector<double> ts;      // increasing, > 0
  std::vector<double> values;  // operator norms, > 0
  NormSpec norm = NormSpec::l2();
  bool truncated = false;  // overflow cut the grid short
};

std::vector<double> default_time_grid();  // logarithmic, 1e-4 .. 1e2, 60 points

NormCurve norm_curve(const CMatrix& a, const NormSpec& norm, double theta,
                     const std::vector<double>& t_grid);

struct EnvelopeReport {
  bool pass = false;
  double worst_t = 0.0;      // grid point with the largest envelope excess
  double worst_excess = 0.0; // max over grid of value / e^{omega t} - 1
};

// values[i] <= e^{omega t_i} (1 + 1e-9) for every grid point?
EnvelopeReport growth_envelope_check(const NormCurve& curve, double omega);

struct SubadditiveReport {
  double sup_value = 0.0;    // sup over grid of (1/t) log ||T(t)||
  double limit_value = 0.0;  // t -> 0 extrapolation from the smallest points
  double max_deviation = 0.0;  // |sup - limit|
};

// The sup over t > 0 of (1/t) log ||T(t)|| equals its t -> 0 limit and both
// equal the growth bound; this measures how well the curve exhibits that.
SubadditiveReport subadditive_limit_check(const NormCurve& curve);

struct StabilityReport {
  bool envelope_ok = false;  // ||T(t)|| <= e^{-eps t} on the grid
  bool pairing_ok = false;   // lognorm value <= -eps + 1e-8
};

// The two checks are equivalent in exact arithmetic; disagreement throws
// DiagnosticError (it falsifies an estimator, not the equivalence).
StabilityReport stability_equivalence_check(const CMatrix& a, const NormSpec& norm,
                                            double eps,
                                            const std::vector<double>& t_grid);

}  // namespace numspec
