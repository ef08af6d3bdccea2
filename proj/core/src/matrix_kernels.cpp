#include "gaussreduce/matrix_kernels.hpp"

#include <algorithm>
#include <cmath>

namespace gaussreduce {

namespace {

// an entry counts as the "first nonzero" of a column once it clears this
// fraction of the column's largest magnitude
constexpr double kLeadingEntryCut = 1e-7;

int leading_index(const ComplexVector& col) {
  double top = col.cwiseAbs().maxCoeff();
  if (top == 0.0) return 0;
  for (int i = 0; i < col.size(); ++i)
    if (std::abs(col(i)) > kLeadingEntryCut * top) return i;
  return 0;
}

// free per-column phase: rotate so the leading entry is real positive
Complex phase_gauge(const ComplexVector& col) {
  Complex z = col(leading_index(col));
  double a = std::abs(z);
  return (a == 0.0) ? Complex(1, 0) : std::conj(z) / a;
}

// sign-only freedom: flip so the leading entry has positive real part,
// falling back to the imaginary part when the real part is negligible
double sign_gauge(const ComplexVector& col) {
  Complex z = col(leading_index(col));
  double a = std::abs(z);
  if (a == 0.0) return 1.0;
  double key = (std::abs(z.real()) > 1e-8 * a) ? z.real() : z.imag();
  return key >= 0.0 ? 1.0 : -1.0;
}

double sign_gauge_real(const Eigen::Ref<const RealVector>& col) {
  double top = col.cwiseAbs().maxCoeff();
  if (top == 0.0) return 1.0;
  for (int i = 0; i < col.size(); ++i)
    if (std::abs(col(i)) > kLeadingEntryCut * top) return col(i) >= 0 ? 1.0 : -1.0;
  return 1.0;
}

void require_finite(const ComplexMatrix& M) {
  if (!M.allFinite()) throw InvalidInputError("matrix has non-finite entries");
}

void require_finite(const RealMatrix& M) {
  if (!M.allFinite()) throw InvalidInputError("matrix has non-finite entries");
}

}  // namespace

std::vector<std::pair<int, int>> degenerate_groups(const RealVector& values,
                                                   double rel_tol) {
  std::vector<std::pair<int, int>> groups;
  int n = static_cast<int>(values.size());
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    bool split = (i == n);
    if (!split) {
      double gap = std::abs(values(i - 1) - values(i));
      double scale = std::max({1.0, std::abs(values(i - 1)), std::abs(values(i))});
      split = gap > rel_tol * scale;
    }
    if (split) {
      groups.emplace_back(start, i - start);
      start = i;
    }
  }
  return groups;
}

SvdResult svd(const ComplexMatrix& M, const ToleranceConfig& tol) {
  require_finite(M);
  Eigen::JacobiSVD<ComplexMatrix> solver(M,
                                         Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdResult out;
  out.U = solver.matrixU();
  out.V = solver.matrixV();
  out.sigma = solver.singularValues();
  // the shared phase of each (U, V) column pair is free; pin it via U
  int k = static_cast<int>(out.sigma.size());
  for (int j = 0; j < k; ++j) {
    Complex c = phase_gauge(out.U.col(j));
    out.U.col(j) *= c;
    out.V.col(j) *= c;
  }
  for (int j = k; j < out.U.cols(); ++j) out.U.col(j) *= phase_gauge(out.U.col(j));
  for (int j = k; j < out.V.cols(); ++j) out.V.col(j) *= phase_gauge(out.V.col(j));
  out.groups = degenerate_groups(out.sigma, tol.degeneracy_tol);
  return out;
}

EighResult eigh_symmetric(const RealMatrix& M, const ToleranceConfig& tol) {
  require_finite(M);
  if (M.rows() != M.cols())
    throw InvalidInputError("eigh_symmetric: matrix must be square");
  double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol.structural_tol)
    throw InvalidInputError("eigh_symmetric: matrix is not symmetric (residual " +
                            std::to_string(asym) + ")");
  RealMatrix Ms = 0.5 * (M + M.transpose());
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(Ms);
  if (solver.info() != Eigen::Success)
    throw NumericalFailureError("eigh_symmetric: solver did not converge", asym);
  int n = static_cast<int>(M.rows());
  EighResult out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  for (int j = 0; j < n; ++j) out.vectors.col(j) *= sign_gauge_real(out.vectors.col(j));
  out.groups = degenerate_groups(out.values, tol.degeneracy_tol);
  return out;
}

PolarResult polar_decompose(const RealMatrix& S, const ToleranceConfig& tol) {
  require_finite(S);
  if (S.rows() != S.cols())
    throw InvalidInputError("polar_decompose: matrix must be square");
  Eigen::JacobiSVD<RealMatrix> solver(S, Eigen::ComputeFullU | Eigen::ComputeFullV);
  double smin = solver.singularValues().minCoeff();
  if (smin <= tol.structural_tol)
    throw SingularInputError("polar_decompose: smallest singular value " +
                             std::to_string(smin) + " is not invertible");
  PolarResult out;
  out.orthogonal = solver.matrixU() * solver.matrixV().transpose();
  out.positive = solver.matrixV() * solver.singularValues().asDiagonal() *
                 solver.matrixV().transpose();
  out.positive = 0.5 * (out.positive + out.positive.transpose().eval());
  return out;
}

TakagiResult takagi(const ComplexMatrix& M, const ToleranceConfig& tol) {
  require_finite(M);
  if (M.rows() != M.cols()) throw InvalidInputError("takagi: matrix must be square");
  int n = static_cast<int>(M.rows());
  double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol.structural_tol)
    throw InvalidInputError("takagi: matrix is not symmetric (residual " +
                            std::to_string(asym) + ")");

  // factor columns w = u + iv come from eigenvectors (u; v) of the real
  // symmetric embedding H = [[X, Y], [Y, -X]]: H (u; v) = d (u; v) implies
  // M conj(w) = d w, and the spectrum of H is symmetric about zero
  RealMatrix X = 0.5 * (M.real() + M.real().transpose().eval());
  RealMatrix Y = 0.5 * (M.imag() + M.imag().transpose().eval());
  RealMatrix H(2 * n, 2 * n);
  H << X, Y, Y, -X;
  EighResult eig = eigh_symmetric(H, tol);

  double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  double zero_cut = tol.structural_tol * scale;
  std::vector<int> pos, zero, neg;
  for (int i = 0; i < 2 * n; ++i) {
    if (eig.values(i) > zero_cut)
      pos.push_back(i);
    else if (eig.values(i) < -zero_cut)
      neg.push_back(i);
    else
      zero.push_back(i);
  }
  if (pos.size() != neg.size() || zero.size() % 2 != 0)
    throw NumericalFailureError("takagi: spectrum of the symmetric embedding is not paired",
                                zero_cut);

  TakagiResult out;
  out.W = ComplexMatrix(n, n);
  out.d = RealVector(n);
  int col = 0;
  for (int idx : pos) {
    RealVector e = eig.vectors.col(idx);
    out.W.col(col) = e.head(n).cast<Complex>() + Complex(0, 1) * e.tail(n).cast<Complex>();
    out.d(col) = eig.values(idx);
    ++col;
  }

  // kernel: J (u; v) = (-v; u) maps the zero space to itself, so pick an
  // orthonormal set {z_k} with the J-partners removed after each pick
  if (!zero.empty()) {
    RealMatrix Z(2 * n, static_cast<int>(zero.size()));
    for (size_t j = 0; j < zero.size(); ++j) Z.col(static_cast<int>(j)) = eig.vectors.col(zero[j]);
    int remaining = static_cast<int>(zero.size());
    while (remaining >= 2) {
      RealVector z = Z.col(0);
      z.normalize();
      RealVector jz(2 * n);
      jz << -z.tail(n), z.head(n);
      out.W.col(col) = z.head(n).cast<Complex>() + Complex(0, 1) * z.tail(n).cast<Complex>();
      out.d(col) = 0.0;
      ++col;
      // project the rest of the kernel basis off {z, Jz} and re-orthonormalize
      RealMatrix next(2 * n, remaining - 2);
      int written = 0;
      for (int j = 1; j < remaining && written < remaining - 2; ++j) {
        RealVector c = Z.col(j);
        c -= z * z.dot(c) + jz * jz.dot(c);
        for (int k = 0; k < written; ++k) c -= next.col(k) * next.col(k).dot(c);
        double nrm = c.norm();
        if (nrm > 1e-6) next.col(written++) = c / nrm;
      }
      if (written != remaining - 2)
        throw NumericalFailureError("takagi: kernel pairing collapsed", zero_cut);
      Z = next;
      remaining -= 2;
    }
  }
  if (col != n)
    throw NumericalFailureError("takagi: factor assembly is incomplete", zero_cut);

  for (int j = 0; j < n; ++j) {
    if (out.d(j) > zero_cut)
      out.W.col(j) *= sign_gauge(out.W.col(j));
    else
      out.W.col(j) *= phase_gauge(out.W.col(j));
  }
  out.groups = degenerate_groups(out.d, tol.degeneracy_tol);
  return out;
}

}  // namespace gaussreduce
