#pragma once

#include "numspec/spectrum.hpp"

#include <memory>
#include <vector>

namespace numspec {

struct TimeGridSpec {
  double dt = 0.01;        // spacing, rescaled by 1 / max(1, ||A||_1)
  double t_max = 20.0;     // initial horizon, doubled until the tail certifies
  double t_cap = 1e4;      // giving up beyond this is a numerical error
};

// The equivalent norm |||x||| = sup_{t >= 0} ||e^{-omega t} e^{t A_theta} x||
// with A_theta = e^{-i theta} A, evaluated on a uniform time grid [0, T].
// Truncation at T is certified through the operator-norm curve
// g(t) = e^{-omega t} ||e^{t A_theta}||: by submultiplicativity
// sup_{t >= T} g(t) <= g(T) * sup_grid g, so once g(T) * sup_grid g < 1 the
// sup over [T, inf) cannot exceed the t = 0 term of any x.
class HildebrandtNorm {
public:
  const CMatrix& matrix() const { return a_; }
  double theta() const { return theta_; }
  double omega() const { return omega_; }
  double base_p() const { return base_p_; }
  double t_max() const { return t_max_; }
  double dt() const { return dt_; }
  int grid_size() const { return static_cast<int>(grid_size_); }

  double operator()(const CVector& x) const;
  CVector subgradient(const CVector& x) const;  // at the active grid time

  // ||x||_base <= |||x||| <= M ||x||_base
  double equivalence_upper() const { return equiv_upper_; }

private:
  friend std::shared_ptr<const HildebrandtNorm> build_hildebrandt_norm(
      const CMatrix&, double, double, const NormSpec&, const TimeGridSpec&);

  CMatrix a_;
  double theta_ = 0.0, omega_ = 0.0, base_p_ = 2.0;
  double dt_ = 0.0, t_max_ = 0.0;
  Eigen::Index grid_size_ = 0;
  CMatrix stacked_;  // (grid_size * n) x n, rows of e^{-omega t_k} e^{t_k A_theta}
  double equiv_upper_ = 1.0;
};

// Validates omega > spectral abscissa of e^{-i theta} A (by 1e-6) and extends
// the horizon until the truncation certificate holds.
std::shared_ptr<const HildebrandtNorm> build_hildebrandt_norm(
    const CMatrix& a, double theta, double omega, const NormSpec& base,
    const TimeGridSpec& grid = {});

// Full sweep under the renormed norm (quotient estimator only). The inner
// hull is seeded with the eigenvalues of A, which lie in every region.
// Checks the construction's contract mu(A_theta) <= omega + tol.
Region renormed_region(const HildebrandtNorm& norm, int angle_count,
                       std::uint64_t seed = 0);

struct HullConvergencePoint {
  double omega = 0.0;
  Region region;           // intersection over the rotation fan
  double radius = 0.0;
  double hausdorff_to_spectrum_hull = 0.0;
};

struct HullConvergenceOptions {
  int fan_directions = 8;  // rotation angles per omega
  int angle_count = 72;    // support angles distributed across the fan
  std::uint64_t seed = 0;
  TimeGridSpec grid;
};

// For each omega (strictly decreasing, all above the spectral abscissa),
// renorm in each fan direction, sweep every direction over its own arc, and
// intersect all resulting half planes into one region.
std::vector<HullConvergencePoint> hull_convergence_report(
    const CMatrix& a, const NormSpec& base, const std::vector<double>& omegas,
    const HullConvergenceOptions& opts = {});

}  // namespace numspec
