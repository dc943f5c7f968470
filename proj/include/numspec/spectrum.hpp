#pragma once

#include "numspec/geometry.hpp"
#include "numspec/lognorm.hpp"

#include <optional>
#include <vector>

namespace numspec {

// One support-function sample: h(theta) = mu(e^{-i theta} A), the least omega
// for which the rotated operator generates an omega-contractive semigroup.
struct SupportSample {
  double theta = 0.0;                     // in [0, 2pi)
  double h = 0.0;                         // = s_n^theta(A)
  std::optional<Complex> witness_point;   // pairing value near the supporting line
};

struct SectorFit {
  double theta = 0.0;       // sector is z + e^{-i theta} {|arg| <= half_angle}
  double half_angle = 0.0;  // < pi/2
  Complex vertex{0.0, 0.0};
};

struct StripFit {
  double theta = 0.0;   // strip is {e^{-i theta} lam : omega1 <= Re lam <= omega2}
  double omega1 = 0.0;
  double omega2 = 0.0;
};

struct ShapeClass {
  bool compact = true;  // finite matrices always
  bool within_imaginary_axis = false;
  bool isometric_group = false;  // iff the region lies on the imaginary axis
  std::optional<StripFit> strip;
  std::optional<SectorFit> sector;
  double minimal_strip_width = 0.0;
};

// The reconstructed numerical spectrum.
struct Region {
  std::vector<SupportSample> samples;
  std::vector<Complex> outer_vertices;  // CCW; intersection of sampled half planes
  std::vector<Complex> inner_vertices;  // CCW; hull of witness pairing points
  double gap = 0.0;      // max over outer vertices of distance to inner hull; NaN if no witnesses
  double radius = 0.0;   // r_n: max |v| over outer vertices
  double s_n_at_zero = 0.0;
  ShapeClass classification;
};

// Pass/fail record for the resolvent estimate
// ||R(lambda, A)|| <= 1 / d(lambda, boundary of H_{theta,omega})
// on a finite grid of lambda inside the open half plane H_{theta,omega}.
struct Certificate {
  double theta = 0.0;
  double omega = 0.0;
  std::vector<Complex> grid;
  double worst_ratio = 0.0;  // max over grid of ||R|| * d; +inf on a singular hit
  bool pass = false;
  std::vector<std::pair<Complex, double>> failures;  // (lambda, ratio) exceeding 1 + tol
};

struct SweepOptions {
  std::uint64_t seed = 0;
  // for p outside {1,2,inf}: max tolerated |quotient - duality| before the
  // sweep reports estimator failure (scaled by 1 + |h|)
  double cross_check_tol = 2e-3;
  bool with_witnesses = true;
};

// K samples at theta_k = 2 pi k / K. h via the closed form when p is in
// {1,2,inf}; otherwise the difference quotient cross-checked against the
// duality estimator. Renormed norms use the quotient only (no witnesses).
std::vector<SupportSample> support_sweep(const CMatrix& a, const NormSpec& norm,
                                         int angle_count,
                                         const SweepOptions& opts = {});

// Outer polygon by half-plane intersection, inner hull from the sample
// witness points plus `extra_witnesses`.
Region build_region(const std::vector<SupportSample>& samples,
                    const std::vector<Complex>& extra_witnesses = {});

double numerical_radius(const Region& region);

// s_n^theta(A) = h(theta), linearly interpolated between grid angles.
double numerical_bounds(const std::vector<SupportSample>& samples, double theta);

// Signed distance of z to the sampled outer boundary: min_k (h_k - Re(e^{-i
// theta_k} z)); positive inside.
double support_margin(const std::vector<SupportSample>& samples, Complex z);

// For each eigenvalue its signed margin to the region boundary (>= 0 inside).
std::vector<std::pair<Complex, double>> check_spectrum_inclusion(
    const CMatrix& a, const Region& region);

struct CertifyGridSpec {
  int radial_count = 40;        // log-spaced distances
  int tangential_count = 10;    // linear offsets along the boundary direction
  double d_min_factor = 1e-3;   // distances cover [d_min, d_max] * (1 + ||A||)
  double d_max_factor = 1e3;
  double tangential_span_factor = 2.0;
  double cert_tol = 1e-8;
};

Certificate certify_halfplane(const CMatrix& a, const NormSpec& norm,
                              double theta, double omega,
                              const CertifyGridSpec& grid = {});

ShapeClass classify_region(const std::vector<SupportSample>& samples,
                           double tol = 1e-9);

}  // namespace numspec
