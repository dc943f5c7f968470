#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

namespace numspec {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Error taxonomy shared across the library. The CLI maps these onto exit
// codes: InputError -> 2, NumericalError -> 4.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// lambda numerically inside the spectrum where a resolvent was requested.
class SingularityError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// Support data that cannot bound a nonempty region; signals estimator failure.
class GeometryError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// Two routes that a theorem forces to agree came out different.
class DiagnosticError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool all_finite(const CVector& x) {
  for (Eigen::Index k = 0; k < x.size(); ++k)
    if (!is_finite(x[k])) return false;
  return true;
}

inline bool all_finite(const CMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!is_finite(a(i, j))) return false;
  return true;
}

inline void require_finite(const CVector& x, const char* what) {
  if (x.size() == 0) throw InputError(std::string(what) + ": empty vector");
  if (!all_finite(x)) throw InputError(std::string(what) + ": non-finite entry");
}

inline void require_square_finite(const CMatrix& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols())
    throw InputError(std::string(what) + ": matrix must be square and nonempty");
  if (!all_finite(a)) throw InputError(std::string(what) + ": non-finite entry");
}

class HildebrandtNorm;  // renorm.hpp

// Which norm the space carries: an lp tag with p in [1, inf] (inf as the
// actual infinity value) or a handle to a constructed equivalent norm.
class NormSpec {
public:
  static NormSpec lp(double p) {
    if (!(p >= 1.0))  // NaN rejected too
      throw InputError("NormSpec: p must satisfy p >= 1");
    NormSpec s;
    s.p_ = p;
    return s;
  }
  static NormSpec l1() { return lp(1.0); }
  static NormSpec l2() { return lp(2.0); }
  static NormSpec linf() { return lp(kInf); }
  static NormSpec renormed(std::shared_ptr<const HildebrandtNorm> h) {
    if (!h) throw InputError("NormSpec: null renorm handle");
    NormSpec s;
    s.renorm_ = std::move(h);
    return s;
  }

  bool is_lp() const { return renorm_ == nullptr; }
  bool is_renormed() const { return renorm_ != nullptr; }

  double p() const {
    if (is_renormed()) throw InputError("NormSpec: p() on a renormed norm");
    return p_;
  }
  const HildebrandtNorm& renorm() const {
    if (!renorm_) throw InputError("NormSpec: not a renormed norm");
    return *renorm_;
  }
  std::shared_ptr<const HildebrandtNorm> renorm_handle() const { return renorm_; }

  // conjugate exponent q with 1/p + 1/q = 1
  double dual_p() const {
    double pp = p();
    if (pp == 1.0) return kInf;
    if (pp == kInf) return 1.0;
    return pp / (pp - 1.0);
  }

private:
  NormSpec() = default;
  double p_ = 2.0;
  std::shared_ptr<const HildebrandtNorm> renorm_;
};

}  // namespace numspec
