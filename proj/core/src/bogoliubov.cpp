#include "gaussreduce/bogoliubov.hpp"

#include <cmath>
#include <random>

namespace gaussreduce {

namespace {

void require_shape(const GaussianTransform& t) {
  int n = static_cast<int>(t.A.rows());
  if (n == 0) throw InvalidInputError("transform has no modes");
  if (t.A.cols() != n || t.B.rows() != n || t.B.cols() != n)
    throw InvalidInputError("transform blocks must be square and equally sized");
  if (t.beta.size() != n)
    throw InvalidInputError("displacement length must match the mode count");
  if (!t.A.allFinite() || !t.B.allFinite() || !t.beta.allFinite())
    throw InvalidInputError("transform has non-finite entries");
}

void require_same_modes(const GaussianTransform& a, const GaussianTransform& b) {
  if (a.A.rows() != b.A.rows())
    throw InvalidInputError("transforms act on different mode counts");
}

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

GaussianTransform identity_transform(int n_modes) {
  if (n_modes <= 0) throw InvalidInputError("mode count must be positive");
  GaussianTransform t;
  t.A = ComplexMatrix::Identity(n_modes, n_modes);
  t.B = ComplexMatrix::Zero(n_modes, n_modes);
  t.beta = ComplexVector::Zero(n_modes);
  return t;
}

ValidationReport validate(const GaussianTransform& t) {
  require_shape(t);
  int n = t.n_modes();
  ComplexMatrix I = ComplexMatrix::Identity(n, n);
  ComplexMatrix abt = t.A * t.B.transpose();
  ComplexMatrix adb = t.A.adjoint() * t.B;
  ValidationReport r;
  r.rel1 = max_abs(abt - abt.transpose().eval());
  r.rel2 = max_abs(t.A * t.A.adjoint() - t.B * t.B.adjoint() - I);
  r.rel3 = max_abs(adb - adb.transpose().eval());
  r.rel4 = max_abs(t.A.adjoint() * t.A - (t.B.adjoint() * t.B).transpose().eval() - I);
  r.max_residual = std::max({r.rel1, r.rel2, r.rel3, r.rel4});
  return r;
}

void require_valid(const GaussianTransform& t, const ToleranceConfig& tol,
                   const std::string& context) {
  ValidationReport r = validate(t);
  if (!r.valid(tol.structural_tol))
    throw InvalidInputError(context + ": transform violates the canonical constraints (residual " +
                            std::to_string(r.max_residual) + ")");
}

GaussianTransform compose(const GaussianTransform& second,
                          const GaussianTransform& first) {
  require_shape(first);
  require_shape(second);
  require_same_modes(first, second);
  GaussianTransform t;
  t.A = second.A * first.A + second.B * first.B.conjugate();
  t.B = second.A * first.B + second.B * first.A.conjugate();
  t.beta = second.beta + second.A * first.beta + second.B * first.beta.conjugate();
  return t;
}

GaussianTransform inverse(const GaussianTransform& t, const ToleranceConfig& tol) {
  require_valid(t, tol, "inverse");
  GaussianTransform inv;
  inv.A = t.A.adjoint();
  inv.B = -t.B.transpose();
  inv.beta = -(t.A.adjoint() * t.beta) + t.B.transpose() * t.beta.conjugate();
  return inv;
}

RealMatrix symplectic_form(int n_modes) {
  RealMatrix omega = RealMatrix::Zero(2 * n_modes, 2 * n_modes);
  omega.topRightCorner(n_modes, n_modes) = RealMatrix::Identity(n_modes, n_modes);
  omega.bottomLeftCorner(n_modes, n_modes) = -RealMatrix::Identity(n_modes, n_modes);
  return omega;
}

RealMatrix to_real_symplectic(const GaussianTransform& t, const ToleranceConfig& tol) {
  require_valid(t, tol, "to_real_symplectic");
  int n = t.n_modes();
  ComplexMatrix sum = t.A + t.B;
  ComplexMatrix diff = t.A - t.B;
  RealMatrix S(2 * n, 2 * n);
  S.topLeftCorner(n, n) = sum.real();
  S.topRightCorner(n, n) = -diff.imag();
  S.bottomLeftCorner(n, n) = sum.imag();
  S.bottomRightCorner(n, n) = diff.real();
  return S;
}

GaussianTransform from_real_symplectic(const RealMatrix& S, const ToleranceConfig& tol) {
  if (!S.allFinite()) throw InvalidInputError("matrix has non-finite entries");
  if (S.rows() != S.cols() || S.rows() % 2 != 0 || S.rows() == 0)
    throw InvalidInputError("symplectic matrix must be square with even dimension");
  int n = static_cast<int>(S.rows()) / 2;
  RealMatrix omega = symplectic_form(n);
  double defect = (S * omega * S.transpose() - omega).cwiseAbs().maxCoeff();
  if (defect > tol.structural_tol)
    throw InvalidInputError("matrix is not symplectic (residual " +
                            std::to_string(defect) + ")");
  RealMatrix s11 = S.topLeftCorner(n, n);
  RealMatrix s12 = S.topRightCorner(n, n);
  RealMatrix s21 = S.bottomLeftCorner(n, n);
  RealMatrix s22 = S.bottomRightCorner(n, n);
  GaussianTransform t;
  t.A = 0.5 * ((s11 + s22).cast<Complex>() + Complex(0, 1) * (s21 - s12).cast<Complex>());
  t.B = 0.5 * ((s11 - s22).cast<Complex>() + Complex(0, 1) * (s21 + s12).cast<Complex>());
  t.beta = ComplexVector::Zero(n);
  return t;
}

double transform_distance(const GaussianTransform& a, const GaussianTransform& b) {
  require_shape(a);
  require_shape(b);
  require_same_modes(a, b);
  double d = max_abs(a.A - b.A);
  d = std::max(d, max_abs(a.B - b.B));
  d = std::max(d, (a.beta - b.beta).cwiseAbs().maxCoeff());
  return d;
}

GaussianTransform random_transform(int n_modes, double max_r, std::uint64_t seed) {
  if (n_modes <= 0) throw InvalidInputError("mode count must be positive");
  if (max_r < 0.0 || !std::isfinite(max_r))
    throw InvalidInputError("squeezing bound must be finite and non-negative");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto haar = [&](int n) {
    ComplexMatrix G(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) G(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(G);
    ComplexMatrix Q = qr.householderQ();
    ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
      Complex d = R(j, j);
      double a = std::abs(d);
      Q.col(j) *= (a == 0.0) ? Complex(1, 0) : d / a;
    }
    return Q;
  };
  ComplexMatrix U = haar(n_modes);
  ComplexMatrix V = haar(n_modes);
  std::uniform_real_distribution<double> uni(0.0, max_r);
  RealVector r(n_modes);
  for (int j = 0; j < n_modes; ++j) r(j) = uni(rng);
  GaussianTransform t;
  t.A = U * r.array().cosh().matrix().asDiagonal() * V.adjoint();
  t.B = U * r.array().sinh().matrix().asDiagonal() * V.transpose();
  t.beta = ComplexVector::Zero(n_modes);
  return t;
}

}  // namespace gaussreduce
