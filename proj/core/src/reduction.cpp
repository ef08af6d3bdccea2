#include "gaussreduce/reduction.hpp"

#include <cmath>
#include <vector>

namespace gaussreduce {

namespace {

// orthogonal symplectic blocks [[X, -Y], [Y, X]] carry the unitary X + iY
ComplexMatrix passive_unitary(const RealMatrix& O, double structural_tol) {
  int n = static_cast<int>(O.rows()) / 2;
  RealMatrix x = O.topLeftCorner(n, n);
  RealMatrix y = O.bottomLeftCorner(n, n);
  double defect = std::max((O.bottomRightCorner(n, n) - x).cwiseAbs().maxCoeff(),
                           (O.topRightCorner(n, n) + y).cwiseAbs().maxCoeff());
  if (defect > 100 * structural_tol)
    throw NumericalFailureError("orthogonal factor fell outside the passive block form",
                                defect);
  return x.cast<Complex>() + Complex(0, 1) * y.cast<Complex>();
}

int leading_index(const ComplexVector& col) {
  double top = col.cwiseAbs().maxCoeff();
  if (top == 0.0) return 0;
  for (int i = 0; i < col.size(); ++i)
    if (std::abs(col(i)) > 1e-7 * top) return i;
  return 0;
}

// fix the shared real-orthogonal gauge of one degenerate r > 0 block by
// diagonalizing V_blk^T V_blk: its real part first, then the imaginary part
// inside any leftover degenerate eigenspaces
RealMatrix block_gauge(const ComplexMatrix& v_blk, const ToleranceConfig& tol) {
  ComplexMatrix w = v_blk.transpose() * v_blk;
  EighResult first = eigh_symmetric(0.5 * (w.real() + w.real().transpose().eval()), tol);
  RealMatrix q = first.vectors;
  RealMatrix im = q.transpose() * 0.5 * (w.imag() + w.imag().transpose().eval()) * q;
  for (auto [start, len] : first.groups) {
    if (len < 2) continue;
    EighResult inner = eigh_symmetric(
        0.5 * (im.block(start, start, len, len) +
               im.block(start, start, len, len).transpose().eval()),
        tol);
    q.middleCols(start, len) = q.middleCols(start, len) * inner.vectors;
  }
  return q;
}

}  // namespace

BlochMessiahForm reduce(const GaussianTransform& t, const ToleranceConfig& tol) {
  require_valid(t, tol, "reduce");
  int n = t.n_modes();
  RealMatrix S = to_real_symplectic(t, tol);
  PolarResult polar = polar_decompose(S, tol);
  EighResult eig = eigh_symmetric(polar.positive, tol);
  if (eig.values.minCoeff() <= 0.0)
    throw NumericalFailureError("stretch factor of the symplectic image is not positive",
                                eig.values.minCoeff());

  RealVector r_full = eig.values.array().log();
  std::vector<int> pos, unit, negidx;
  for (int i = 0; i < 2 * n; ++i) {
    if (r_full(i) > tol.structural_tol)
      pos.push_back(i);
    else if (r_full(i) < -tol.structural_tol)
      negidx.push_back(i);
    else
      unit.push_back(i);
  }
  if (pos.size() != negidx.size() || unit.size() % 2 != 0)
    throw NumericalFailureError(
        "squeezing values do not pair up across the structural band",
        tol.structural_tol);
  int k = static_cast<int>(pos.size());
  for (int i = 0; i < k; ++i) {
    double sum = r_full(pos[i]) + r_full(negidx[k - 1 - i]);
    double slack = 10 * tol.degeneracy_tol * std::max(1.0, r_full(pos[i]));
    if (std::abs(sum) > slack)
      throw NumericalFailureError("squeezing values are not sign-symmetric",
                                  std::abs(sum));
  }

  RealMatrix omega_t = symplectic_form(n).transpose();
  RealMatrix O2(2 * n, 2 * n);
  RealVector r = RealVector::Zero(n);
  for (int i = 0; i < k; ++i) {
    RealVector v = eig.vectors.col(pos[i]);
    O2.col(i) = v;
    O2.col(n + i) = omega_t * v;
    r(i) = r_full(pos[i]);
  }
  if (!unit.empty()) {
    int m = static_cast<int>(unit.size());
    RealMatrix Z(2 * n, m);
    for (int j = 0; j < m; ++j) Z.col(j) = eig.vectors.col(unit[j]);
    int col = k;
    int remaining = m;
    while (remaining >= 2) {
      RealVector z = Z.col(0);
      z.normalize();
      RealVector w = omega_t * z;
      O2.col(col) = z;
      O2.col(n + col) = w;
      ++col;
      RealMatrix next(2 * n, remaining - 2);
      int written = 0;
      for (int j = 1; j < remaining && written < remaining - 2; ++j) {
        RealVector c = Z.col(j);
        c -= z * z.dot(c) + w * w.dot(c);
        for (int q = 0; q < written; ++q) c -= next.col(q) * next.col(q).dot(c);
        double nrm = c.norm();
        if (nrm > 1e-6) next.col(written++) = c / nrm;
      }
      if (written != remaining - 2)
        throw NumericalFailureError("unit eigenspace pairing collapsed",
                                    tol.structural_tol);
      Z = next;
      remaining -= 2;
    }
  }

  BlochMessiahForm form;
  form.U = passive_unitary(polar.orthogonal * O2, tol.structural_tol);
  form.V = passive_unitary(O2, tol.structural_tol);
  form.r = r;
  form.beta = t.beta;

  // shared real-orthogonal gauge inside each degenerate positive block
  if (k > 1) {
    for (auto [start, len] : degenerate_groups(r.head(k), tol.degeneracy_tol)) {
      if (len < 2) continue;
      RealMatrix q = block_gauge(form.V.middleCols(start, len), tol);
      form.U.middleCols(start, len) = form.U.middleCols(start, len) * q;
      form.V.middleCols(start, len) = form.V.middleCols(start, len) * q;
    }
  }

  // per-column gauge, led by U: a sign for squeezed columns, a phase for
  // unsqueezed ones
  for (int j = 0; j < n; ++j) {
    Complex z = form.U(leading_index(form.U.col(j)), j);
    double a = std::abs(z);
    if (a == 0.0) continue;
    Complex c;
    if (j < k) {
      double key = (std::abs(z.real()) > 1e-8 * a) ? z.real() : z.imag();
      c = (key >= 0.0) ? 1.0 : -1.0;
    } else {
      c = std::conj(z) / a;
    }
    form.U.col(j) *= c;
    form.V.col(j) *= c;
  }

  double residual = transform_distance(recompose(form, tol), t);
  if (residual > 10 * tol.structural_tol)
    throw NumericalFailureError("factorization does not reproduce the transform",
                                residual);
  return form;
}

GaussianTransform recompose(const BlochMessiahForm& form, const ToleranceConfig& tol) {
  int n = form.n_modes();
  if (n == 0) throw InvalidInputError("factorization has no modes");
  if (form.U.rows() != n || form.U.cols() != n || form.V.rows() != n ||
      form.V.cols() != n || form.beta.size() != n)
    throw InvalidInputError("factorization blocks must share the mode count");
  if (!form.U.allFinite() || !form.V.allFinite() || !form.r.allFinite() ||
      !form.beta.allFinite())
    throw InvalidInputError("factorization has non-finite entries");
  ComplexMatrix eye = ComplexMatrix::Identity(n, n);
  if ((form.U * form.U.adjoint() - eye).cwiseAbs().maxCoeff() > tol.structural_tol ||
      (form.V * form.V.adjoint() - eye).cwiseAbs().maxCoeff() > tol.structural_tol)
    throw InvalidInputError("factorization witnesses must be unitary");
  GaussianTransform t;
  t.A = form.U * form.r.array().cosh().matrix().asDiagonal() * form.V.adjoint();
  t.B = form.U * form.r.array().sinh().matrix().asDiagonal() * form.V.transpose();
  t.beta = form.beta;
  return t;
}

RealVector squeeze_spectrum(const GaussianTransform& t, const ToleranceConfig& tol) {
  require_valid(t, tol, "squeeze_spectrum");
  int n = t.n_modes();
  RealMatrix S = to_real_symplectic(t, tol);
  PolarResult polar = polar_decompose(S, tol);
  EighResult eig = eigh_symmetric(polar.positive, tol);
  if (eig.values.minCoeff() <= 0.0)
    throw NumericalFailureError("stretch factor of the symplectic image is not positive",
                                eig.values.minCoeff());
  RealVector r_full = eig.values.array().log();
  for (int j = 0; j < n; ++j) {
    double sum = r_full(j) + r_full(2 * n - 1 - j);
    double slack = 10 * tol.degeneracy_tol * std::max(1.0, std::abs(r_full(j)));
    if (std::abs(sum) > slack)
      throw NumericalFailureError("squeezing values are not sign-symmetric",
                                  std::abs(sum));
  }
  RealVector r = r_full.head(n);
  for (int j = 0; j < n; ++j)
    if (std::abs(r(j)) <= tol.structural_tol) r(j) = 0.0;
  if (r.minCoeff() < 0.0)
    throw NumericalFailureError("negative squeezing value in the leading half",
                                r.minCoeff());
  return r;
}

int squeezer_count(const GaussianTransform& t, double threshold,
                   const ToleranceConfig& tol) {
  if (!(threshold >= 0.0))
    throw InvalidInputError("count threshold must be non-negative");
  RealVector r = squeeze_spectrum(t, tol);
  int count = 0;
  for (int j = 0; j < r.size(); ++j)
    if (r(j) > threshold) ++count;
  return count;
}

}  // namespace gaussreduce
