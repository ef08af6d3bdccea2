#include "gaussreduce/matrix_kernels.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"

using namespace gaussreduce;
using testutil::max_abs_diff;

namespace {

const double kSqrt5Half = std::sqrt(5.0) / 2.0;

ComplexMatrix reconstruct(const SvdResult& r) {
  return r.U * r.sigma.asDiagonal() * r.V.adjoint();
}

}  // namespace

TEST(DegenerateGroups, SplitsOnRelativeGap) {
  RealVector v(5);
  v << 2.0 + 1e-9, 2.0, 1.0, 1.0 - 1e-10, 0.2;
  auto groups = degenerate_groups(v, 1e-8);
  ASSERT_EQ(groups.size(), 3u);
  EXPECT_EQ(groups[0], (std::pair<int, int>{0, 2}));
  EXPECT_EQ(groups[1], (std::pair<int, int>{2, 2}));
  EXPECT_EQ(groups[2], (std::pair<int, int>{4, 1}));
}

TEST(DegenerateGroups, AllDistinct) {
  RealVector v(3);
  v << 3.0, 2.0, 1.0;
  auto groups = degenerate_groups(v, 1e-8);
  ASSERT_EQ(groups.size(), 3u);
}

TEST(Svd, Identity) {
  ComplexMatrix I = ComplexMatrix::Identity(3, 3);
  auto r = svd(I);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.sigma(i), 1.0, 1e-14);
  EXPECT_LT(max_abs_diff(reconstruct(r), I), 1e-14);
  ASSERT_EQ(r.groups.size(), 1u);
  EXPECT_EQ(r.groups[0].second, 3);
}

TEST(Svd, AntiDiagonalKnownFactors) {
  ComplexMatrix M(2, 2);
  M << 0, 2, 1, 0;
  auto r = svd(M);
  EXPECT_NEAR(r.sigma(0), 2.0, 1e-14);
  EXPECT_NEAR(r.sigma(1), 1.0, 1e-14);
  // gauge: first significant entry of each U column real positive
  EXPECT_LT(max_abs_diff(r.U, ComplexMatrix::Identity(2, 2)), 1e-14);
  ComplexMatrix X(2, 2);
  X << 0, 1, 1, 0;
  EXPECT_LT(max_abs_diff(r.V, X), 1e-14);
}

TEST(Svd, DoublyDegenerateSpectrum) {
  // A-block of the back-action-evading coupler: both singular values sqrt(5)/2
  ComplexMatrix A(2, 2);
  A << 1.0, -0.5, 0.5, 1.0;
  auto r = svd(A);
  EXPECT_NEAR(r.sigma(0), kSqrt5Half, 1e-12);
  EXPECT_NEAR(r.sigma(1), kSqrt5Half, 1e-12);
  ASSERT_EQ(r.groups.size(), 1u);
  EXPECT_EQ(r.groups[0], (std::pair<int, int>{0, 2}));
  EXPECT_LT(max_abs_diff(reconstruct(r), A), 1e-12);
}

TEST(Svd, RandomReconstructionAndUnitarity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    ComplexMatrix M = testutil::random_complex(n, n, rng);
    auto r = svd(M);
    EXPECT_LT(max_abs_diff(reconstruct(r), M), 1e-12);
    EXPECT_LT(max_abs_diff(r.U.adjoint() * r.U, ComplexMatrix::Identity(n, n)),
              1e-12);
    EXPECT_LT(max_abs_diff(r.V.adjoint() * r.V, ComplexMatrix::Identity(n, n)),
              1e-12);
    for (int i = 0; i + 1 < n; ++i) EXPECT_GE(r.sigma(i), r.sigma(i + 1));
  }
}

TEST(Svd, SingularValuesInvariantUnderUnitaries) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    ComplexMatrix M = testutil::random_complex(n, n, rng);
    ComplexMatrix P = testutil::haar_unitary(n, rng);
    ComplexMatrix Q = testutil::haar_unitary(n, rng);
    auto r1 = svd(M);
    auto r2 = svd(P * M * Q);
    EXPECT_LT(max_abs_diff(r1.sigma, r2.sigma), 1e-11);
  }
}

TEST(Svd, GaugeIsDeterministic) {
  std::mt19937_64 rng(13);
  ComplexMatrix M = testutil::random_complex(5, 5, rng);
  auto a = svd(M);
  auto b = svd(M);
  EXPECT_EQ(max_abs_diff(a.U, b.U), 0.0);
  EXPECT_EQ(max_abs_diff(a.V, b.V), 0.0);
}

TEST(Svd, NonFiniteRejected) {
  ComplexMatrix M = ComplexMatrix::Zero(2, 2);
  M(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(svd(M), InvalidInputError);
}

TEST(Eigh, PauliX) {
  RealMatrix M(2, 2);
  M << 0, 1, 1, 0;
  auto r = eigh_symmetric(M);
  EXPECT_NEAR(r.values(0), 1.0, 1e-14);
  EXPECT_NEAR(r.values(1), -1.0, 1e-14);
  double s = 1.0 / std::sqrt(2.0);
  RealMatrix Q(2, 2);
  Q << s, s, s, -s;
  EXPECT_LT(max_abs_diff(r.vectors, Q), 1e-14);
}

TEST(Eigh, RandomRoundTrip) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    RealMatrix G = testutil::random_real(n, n, rng);
    RealMatrix M = 0.5 * (G + G.transpose());
    auto r = eigh_symmetric(M);
    EXPECT_LT(
        max_abs_diff(r.vectors * r.values.asDiagonal() * r.vectors.transpose(), M),
        1e-12);
    EXPECT_LT(max_abs_diff(r.vectors.transpose() * r.vectors,
                           RealMatrix::Identity(n, n)),
              1e-12);
    for (int i = 0; i + 1 < n; ++i) EXPECT_GE(r.values(i), r.values(i + 1));
  }
}

TEST(Eigh, AsymmetricRejected) {
  RealMatrix M(2, 2);
  M << 0, 1, 0.5, 0;
  EXPECT_THROW(eigh_symmetric(M), InvalidInputError);
}

TEST(Polar, RotationIsItsOwnOrthogonalFactor) {
  double c = std::cos(0.3), s = std::sin(0.3);
  RealMatrix R(2, 2);
  R << c, -s, s, c;
  auto r = polar_decompose(R);
  EXPECT_LT(max_abs_diff(r.orthogonal, R), 1e-14);
  EXPECT_LT(max_abs_diff(r.positive, RealMatrix::Identity(2, 2)), 1e-14);
}

TEST(Polar, KnownFactors) {
  RealMatrix S(2, 2);
  S << 0, -2, 3, 0;
  auto r = polar_decompose(S);
  RealMatrix O(2, 2), P(2, 2);
  O << 0, -1, 1, 0;
  P << 3, 0, 0, 2;
  EXPECT_LT(max_abs_diff(r.orthogonal, O), 1e-14);
  EXPECT_LT(max_abs_diff(r.positive, P), 1e-14);
}

TEST(Polar, RandomRoundTrip) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    RealMatrix S = testutil::random_real(n, n, rng) +
                   3.0 * RealMatrix::Identity(n, n);
    auto r = polar_decompose(S);
    EXPECT_LT(max_abs_diff(r.orthogonal * r.positive, S), 1e-11);
    EXPECT_LT(max_abs_diff(r.orthogonal.transpose() * r.orthogonal,
                           RealMatrix::Identity(n, n)),
              1e-12);
    EXPECT_LT(max_abs_diff(r.positive, r.positive.transpose()), 1e-12);
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(r.positive);
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
  }
}

TEST(Polar, SingularRejected) {
  RealMatrix S = RealMatrix::Zero(2, 2);
  S(0, 0) = 1.0;
  EXPECT_THROW(polar_decompose(S), SingularInputError);
}

TEST(Takagi, DiagonalWithPhases) {
  ComplexMatrix M = ComplexMatrix::Zero(2, 2);
  M(0, 0) = 0.5 * std::exp(Complex(0, M_PI / 3.0));
  M(1, 1) = 0.2;
  auto r = takagi(M);
  EXPECT_NEAR(r.d(0), 0.5, 1e-13);
  EXPECT_NEAR(r.d(1), 0.2, 1e-13);
  EXPECT_LT(max_abs_diff(r.W * r.d.asDiagonal() * r.W.transpose(), M), 1e-13);
}

TEST(Takagi, SymmetricOffDiagonal) {
  // W diag(t,t) W^T must reproduce the swap-coupling matrix
  double t = 0.46;
  ComplexMatrix M(2, 2);
  M << 0, t, t, 0;
  auto r = takagi(M);
  EXPECT_NEAR(r.d(0), t, 1e-13);
  EXPECT_NEAR(r.d(1), t, 1e-13);
  EXPECT_LT(max_abs_diff(r.W * r.d.asDiagonal() * r.W.transpose(), M), 1e-13);
  EXPECT_LT(max_abs_diff(r.W.adjoint() * r.W, ComplexMatrix::Identity(2, 2)),
            1e-13);
}

TEST(Takagi, ZeroMatrix) {
  ComplexMatrix M = ComplexMatrix::Zero(3, 3);
  auto r = takagi(M);
  EXPECT_LT(testutil::max_abs(r.d), 1e-14);
  EXPECT_LT(max_abs_diff(r.W.adjoint() * r.W, ComplexMatrix::Identity(3, 3)),
            1e-13);
}

TEST(Takagi, RandomSymmetricRoundTrip) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    ComplexMatrix G = testutil::random_complex(n, n, rng);
    ComplexMatrix M = 0.5 * (G + G.transpose());
    auto r = takagi(M);
    EXPECT_LT(max_abs_diff(r.W * r.d.asDiagonal() * r.W.transpose(), M), 1e-11);
    EXPECT_LT(max_abs_diff(r.W.adjoint() * r.W, ComplexMatrix::Identity(n, n)),
              1e-11);
    // Takagi values coincide with singular values
    auto sv = svd(M);
    EXPECT_LT(max_abs_diff(r.d, sv.sigma), 1e-11);
  }
}

TEST(Takagi, RankDeficientRoundTrip) {
  // one exactly-zero value exercises the kernel-space pairing
  std::mt19937_64 rng(42);
  ComplexMatrix W0 = testutil::haar_unitary(3, rng);
  RealVector d0(3);
  d0 << 0.9, 0.4, 0.0;
  ComplexMatrix M = W0 * d0.asDiagonal() * W0.transpose();
  M = 0.5 * (M + M.transpose().eval());
  auto r = takagi(M);
  EXPECT_LT(max_abs_diff(r.d, d0), 1e-12);
  EXPECT_LT(max_abs_diff(r.W * r.d.asDiagonal() * r.W.transpose(), M), 1e-12);
  EXPECT_LT(max_abs_diff(r.W.adjoint() * r.W, ComplexMatrix::Identity(3, 3)),
            1e-12);
}

TEST(Takagi, NonSymmetricRejected) {
  ComplexMatrix M(2, 2);
  M << 0, 1, 0.5, 0;
  EXPECT_THROW(takagi(M), InvalidInputError);
}
