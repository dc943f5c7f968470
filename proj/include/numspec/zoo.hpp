#pragma once

#include "numspec/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace numspec {

struct ZooParams {
  std::optional<int> n;
  std::optional<double> length;       // interval length for the Laplacian
  std::optional<std::uint64_t> seed;
  std::vector<Complex> entries;       // diagonal symbol samples
};

struct ExampleDescriptor {
  std::string name;
  ZooParams params;
  CMatrix matrix;
  std::string notes;  // documented construction
};

// Known names: jordan2, triangular_pm1, shifted_cone_B, diag,
// dirichlet_laplacian, skew_hermitian_random, random.
ExampleDescriptor make_example(const std::string& name, const ZooParams& params = {});

std::vector<std::string> zoo_names();

// Closed-form reference quantities for the examples that have them.

// Numerical radius of [[0,1],[0,0]] in the lp norm:
// ((p-1)/p)^{1-1/p} (1/p)^{1/p} for 1 < p < inf, and 1 for p in {1, inf}.
double jordan_radius(double p);

// Support function of conv{q_k} at angle theta: max_k Re(e^{-i theta} q_k).
double diag_support(const std::vector<Complex>& entries, double theta);

// Eigenvalues of (1/h^2) tridiag(1,-2,1), h = L/(N+1):
// lambda_k = -(4/h^2) sin^2(k pi / (2(N+1))), k = 1..N (decreasing in k).
std::vector<double> laplacian_spectrum(int n, double length);

struct OracleValues {
  std::optional<double> radius;            // for params-provided p
  std::vector<double> support;             // at params-provided thetas
  std::vector<double> spectrum_real;
  std::optional<double> segment_left;
  std::optional<double> segment_right;
};

struct OracleQuery {
  std::optional<double> p;
  std::vector<double> thetas;
};

OracleValues oracle(const std::string& name, const ZooParams& params,
                    const OracleQuery& query = {});

}  // namespace numspec
