#include "numspec/matcore.hpp"

#include "numspec/renorm.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <random>

namespace numspec {

namespace detail {

double lp_norm(const CVector& x, double p) {
  if (p == kInf) return x.cwiseAbs().maxCoeff();
  if (p == 1.0) return x.cwiseAbs().sum();
  if (p == 2.0) return x.norm();
  double s = 0.0;
  for (Eigen::Index k = 0; k < x.size(); ++k) s += std::pow(std::abs(x[k]), p);
  return std::pow(s, 1.0 / p);
}

// |z|^e * phase(z), the building block of lp duality maps
Complex signed_power(Complex z, double e) {
  double a = std::abs(z);
  if (a == 0.0) return Complex(0.0, 0.0);
  return std::pow(a, e) * (z / a);
}

CVector random_complex_vector(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector x(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double re = gauss(rng), im = gauss(rng);
    x[k] = Complex(re, im);
  }
  return x;
}

double max_col_abs_sum(const CMatrix& a) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    best = std::max(best, a.col(j).cwiseAbs().sum());
  return best;
}

double max_row_abs_sum(const CMatrix& a) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    best = std::max(best, a.row(i).cwiseAbs().sum());
  return best;
}

namespace {

// Boyd's power iteration for the lp -> lp operator norm: fixed point
// x <- J_q(A^H J_p(Ax)) with J_e(y) = |y|^{e-1} phase(y). The iteration is
// monotone in ||Ax||_p, so the final value is a lower bound.
struct IterResult {
  double value = 0.0;
  CVector witness;
};

IterResult boyd_iteration(const CMatrix& a, double p, const CVector& start,
                          int max_iters) {
  const double q = p / (p - 1.0);
  CVector x = start / lp_norm(start, p);
  double f = lp_norm(a * x, p);
  for (int it = 0; it < max_iters; ++it) {
    CVector y = a * x;
    for (Eigen::Index k = 0; k < y.size(); ++k) y[k] = signed_power(y[k], p - 1.0);
    CVector z = a.adjoint() * y;
    double zn = lp_norm(z, q);
    if (zn == 0.0) break;
    for (Eigen::Index k = 0; k < z.size(); ++k) z[k] = signed_power(z[k], q - 1.0);
    z /= lp_norm(z, p);
    double fn = lp_norm(a * z, p);
    if (fn <= f * (1.0 + 1e-15)) {
      if (fn > f) {
        x = z;
        f = fn;
      }
      break;
    }
    x = z;
    f = fn;
  }
  return {f, x};
}

// Subgradient ascent on ||Ax|| / ||x|| for norms without a usable fixed
// point (the renormed max-of-norms family).
IterResult ascent_iteration(const CMatrix& a, const NormSpec& norm,
                            const CVector& start, int max_iters) {
  CVector x = start / vec_norm(start, norm);
  double f = vec_norm(a * x, norm);
  double step = 0.5;
  for (int it = 0; it < max_iters; ++it) {
    CVector y = a * x;
    if (vec_norm(y, norm) == 0.0) break;
    CVector g = a.adjoint() * norm_gradient(y, norm);
    bool moved = false;
    while (step > 1e-13) {
      CVector xn = x + step * g;
      xn /= vec_norm(xn, norm);
      double fn = vec_norm(a * xn, norm);
      if (fn > f * (1.0 + 1e-14)) {
        x = xn;
        f = fn;
        step *= 1.5;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return {f, x};
}

std::vector<CVector> make_starts(Eigen::Index n, int restarts, const CVector* warm,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<CVector> starts;
  if (warm && warm->size() == n && all_finite(*warm) && warm->norm() > 0.0)
    starts.push_back(*warm);
  for (Eigen::Index k = 0; k < n && static_cast<int>(starts.size()) < restarts; ++k)
    starts.push_back(CVector::Unit(n, k));
  if (static_cast<int>(starts.size()) < restarts)
    starts.push_back(CVector::Ones(n));
  while (static_cast<int>(starts.size()) < restarts)
    starts.push_back(random_complex_vector(n, rng));
  return starts;
}

}  // namespace

// Warm-startable operator norm shared by op_norm and the quotient schedule.
OpNormResult op_norm_warm(const CMatrix& a, const NormSpec& norm,
                          std::uint64_t seed, int restarts, int max_iters,
                          const CVector* warm) {
  const Eigen::Index n = a.cols();
  OpNormResult r;

  if (norm.is_lp() && norm.p() == 1.0) {
    Eigen::Index jbest = 0;
    double best = -1.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      double s = a.col(j).cwiseAbs().sum();
      if (s > best) {
        best = s;
        jbest = j;
      }
    }
    r.value = best;
    r.witness = CVector::Unit(n, jbest);
    return r;
  }
  if (norm.is_lp() && norm.p() == kInf) {
    Eigen::Index ibest = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      double s = a.row(i).cwiseAbs().sum();
      if (s > best) {
        best = s;
        ibest = i;
      }
    }
    r.value = best;
    CVector x(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex v = a(ibest, j);
      x[j] = (std::abs(v) > 0.0) ? std::conj(v) / std::abs(v) : Complex(1.0, 0.0);
    }
    r.witness = x;
    return r;
  }
  if (norm.is_lp() && norm.p() == 2.0) {
    if (n <= 32) {
      Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinV);
      r.value = svd.singularValues()[0];
      r.witness = svd.matrixV().col(0);
    } else {
      Eigen::BDCSVD<CMatrix> svd(a, Eigen::ComputeThinV);
      r.value = svd.singularValues()[0];
      r.witness = svd.matrixV().col(0);
    }
    return r;
  }

  IterResult best;
  best.value = -1.0;
  for (const CVector& s : make_starts(n, restarts, warm, seed)) {
    IterResult cur = norm.is_lp() ? boyd_iteration(a, norm.p(), s, max_iters)
                                  : ascent_iteration(a, norm, s, max_iters);
    if (cur.value > best.value) best = cur;
  }
  r.value = best.value;
  r.witness = best.witness;
  // stationarity of the final iterate as the reported residual
  if (r.witness.size() > 0 && r.value > 0.0) {
    CVector g = a.adjoint() * norm_gradient(a * r.witness, norm);
    CVector c = norm_gradient(r.witness, norm);
    double cc = c.squaredNorm();
    if (cc > 0.0) {
      double lam = g.dot(c).real() / cc;  // Eigen dot conjugates its argument
      r.residual = (g - lam * c).norm() / std::max(1.0, r.value);
    }
  }
  r.converged = r.residual < 1e-6 || !norm.is_lp();
  return r;
}

}  // namespace detail

double vec_norm(const CVector& x, const NormSpec& norm) {
  require_finite(x, "vec_norm");
  if (norm.is_renormed()) return norm.renorm()(x);
  return detail::lp_norm(x, norm.p());
}

CVector norm_gradient(const CVector& x, const NormSpec& norm) {
  require_finite(x, "norm_gradient");
  if (norm.is_renormed()) return norm.renorm().subgradient(x);
  const double p = norm.p();
  const Eigen::Index n = x.size();
  CVector g = CVector::Zero(n);
  if (p == kInf) {
    Eigen::Index m = 0;
    double best = -1.0;
    for (Eigen::Index k = 0; k < n; ++k)
      if (std::abs(x[k]) > best) {
        best = std::abs(x[k]);
        m = k;
      }
    if (best > 0.0) g[m] = x[m] / std::abs(x[m]);
    return g;
  }
  if (p == 1.0) {
    for (Eigen::Index k = 0; k < n; ++k)
      if (std::abs(x[k]) > 0.0) g[k] = x[k] / std::abs(x[k]);
    return g;
  }
  const double nx = detail::lp_norm(x, p);
  if (nx == 0.0) return g;
  for (Eigen::Index k = 0; k < n; ++k) {
    double a = std::abs(x[k]);
    if (a > 0.0) g[k] = std::pow(a, p - 2.0) * x[k] / std::pow(nx, p - 1.0);
  }
  return g;
}

CVector dual_witness(const CVector& x, const NormSpec& norm) {
  require_finite(x, "dual_witness");
  if (norm.is_renormed())
    throw InputError("dual_witness: defined for lp norms only");
  const double p = norm.p();
  const Eigen::Index n = x.size();
  const double nx = detail::lp_norm(x, p);
  if (nx == 0.0) throw InputError("dual_witness: x must be nonzero");
  CVector j = CVector::Zero(n);
  if (p == 1.0) {
    for (Eigen::Index k = 0; k < n; ++k)
      if (std::abs(x[k]) > 0.0) j[k] = nx * std::conj(x[k]) / std::abs(x[k]);
    return j;
  }
  if (p == kInf) {
    for (Eigen::Index k = 0; k < n; ++k)
      if (std::abs(x[k]) == nx) {  // first maximal coordinate
        j[k] = nx * std::conj(x[k]) / std::abs(x[k]);
        return j;
      }
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    double a = std::abs(x[k]);
    if (a > 0.0)
      j[k] = std::pow(nx, 2.0 - p) * std::pow(a, p - 2.0) * std::conj(x[k]);
  }
  return j;
}

OpNormResult op_norm(const CMatrix& a, const NormSpec& norm, std::uint64_t seed,
                     int restarts) {
  require_square_finite(a, "op_norm");
  return detail::op_norm_warm(a, norm, seed, restarts, 400, nullptr);
}

double op_norm_value(const CMatrix& a, const NormSpec& norm, std::uint64_t seed,
                     int restarts) {
  return op_norm(a, norm, seed, restarts).value;
}

CMatrix mat_exp(const CMatrix& a, double t) {
  require_square_finite(a, "mat_exp");
  if (!std::isfinite(t) || t < 0.0)
    throw InputError("mat_exp: t must be finite and >= 0");
  CMatrix e = (t * a).exp();
  if (!all_finite(e))
    throw NumericalError("mat_exp: overflow at t*||A||_1 = " +
                         std::to_string(t * detail::max_col_abs_sum(a)));
  return e;
}

std::vector<Complex> eigenvalues(const CMatrix& a) {
  require_square_finite(a, "eigenvalues");
  Eigen::ComplexEigenSolver<CMatrix> es(a, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw NumericalError("eigenvalues: QR iteration failed to converge");
  std::vector<Complex> out(a.rows());
  for (Eigen::Index k = 0; k < a.rows(); ++k) out[k] = es.eigenvalues()[k];
  return out;
}

double spectral_abscissa(const CMatrix& a) {
  double best = -kInf;
  for (Complex lam : eigenvalues(a)) best = std::max(best, lam.real());
  return best;
}

double resolvent_norm(const CMatrix& a, Complex lambda, const NormSpec& norm,
                      const std::vector<Complex>* spectrum) {
  require_square_finite(a, "resolvent_norm");
  std::vector<Complex> local;
  if (!spectrum) {
    local = eigenvalues(a);
    spectrum = &local;
  }
  for (Complex ev : *spectrum)
    if (std::abs(lambda - ev) <= 1e-10 * (1.0 + std::abs(lambda)))
      throw SingularityError("resolvent_norm: lambda within tolerance of the spectrum");
  const Eigen::Index n = a.rows();
  CMatrix shifted = -a;
  shifted.diagonal().array() += lambda;
  CMatrix resolvent = shifted.partialPivLu().solve(CMatrix::Identity(n, n));
  if (!all_finite(resolvent))
    throw SingularityError("resolvent_norm: singular solve");
  return op_norm_value(resolvent, norm);
}

}  // namespace numspec
