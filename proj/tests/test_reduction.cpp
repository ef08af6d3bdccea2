#include "gaussreduce/reduction.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "gaussreduce/elements.hpp"
#include "test_util.hpp"

using namespace gaussreduce;

namespace {

// golden constants for the position meter: squeezing ln of the golden ratio,
// mixing angle asin(2/sqrt(5))/2
constexpr double kMeterSqueeze = 0.4812118250596035;
constexpr double kMeterTheta = 0.5535743588970452;

ComplexMatrix meter_output_witness() {
  double s = std::sin(kMeterTheta), c = std::cos(kMeterTheta);
  ComplexMatrix u(2, 2);
  u << Complex(s, 0), Complex(0, -c), Complex(c, 0), Complex(0, s);
  return u;
}

ComplexMatrix meter_input_witness() {
  double s = std::sin(kMeterTheta), c = std::cos(kMeterTheta);
  ComplexMatrix v(2, 2);
  v << Complex(c, 0), Complex(0, -s), Complex(s, 0), Complex(0, c);
  return v;
}

}  // namespace

TEST(Reduce, PlainSqueezerIsItsOwnForm) {
  BlochMessiahForm f = reduce(squeezer(1, 0, 0.8, 0.0));
  ASSERT_EQ(f.r.size(), 1);
  EXPECT_NEAR(f.r(0), 0.8, 1e-12);
  EXPECT_LT(std::abs(f.U(0, 0) - Complex(1, 0)), 1e-12);
  EXPECT_LT(std::abs(f.V(0, 0) - Complex(1, 0)), 1e-12);
}

TEST(Reduce, PhasedSqueezerSplitsThePhaseEvenly) {
  double r = 0.6, phi = 0.5;
  BlochMessiahForm f = reduce(squeezer(1, 0, r, phi));
  EXPECT_NEAR(f.r(0), r, 1e-12);
  EXPECT_LT(std::abs(f.U(0, 0) - std::polar(1.0, phi / 2)), 1e-12);
  EXPECT_LT(std::abs(f.V(0, 0) - std::polar(1.0, phi / 2)), 1e-12);
}

TEST(Reduce, PositionMeterNeedsTwoEqualSqueezers) {
  BlochMessiahForm f = reduce(qnd_coupler());
  ASSERT_EQ(f.r.size(), 2);
  EXPECT_NEAR(f.r(0), kMeterSqueeze, 1e-9);
  EXPECT_NEAR(f.r(1), kMeterSqueeze, 1e-9);
  EXPECT_NEAR(f.r(0), std::log((1.0 + std::sqrt(5.0)) / 2.0), 1e-12);
}

TEST(Reduce, PositionMeterWitnessesLandInTheReferenceGauge) {
  BlochMessiahForm f = reduce(qnd_coupler());
  ComplexMatrix u_ref = meter_output_witness();
  ComplexMatrix v_ref = meter_input_witness();
  // the only residual freedom is a joint column sign
  for (int j = 0; j < 2; ++j) {
    Complex lead = f.U(0, j) / u_ref(0, j);
    double s = lead.real() >= 0 ? 1.0 : -1.0;
    EXPECT_LT((f.U.col(j) - s * u_ref.col(j)).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT((f.V.col(j) - s * v_ref.col(j)).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Reduce, PassiveTransformHasZeroSpectrumExactly) {
  std::mt19937_64 rng(21);
  GaussianTransform t = multiport(testutil::haar_unitary(4, rng));
  BlochMessiahForm f = reduce(t);
  EXPECT_EQ(f.r.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_LT(transform_distance(recompose(f), t), 1e-10);
  EXPECT_LT((f.U * f.V.adjoint() - t.A).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Reduce, TwinBeamPairUsesTwoEqualValues) {
  BlochMessiahForm f = reduce(two_mode_squeezer(2, 0, 1, 0.7));
  EXPECT_NEAR(f.r(0), 0.7, 1e-12);
  EXPECT_NEAR(f.r(1), 0.7, 1e-12);
  EXPECT_LT(transform_distance(recompose(f), two_mode_squeezer(2, 0, 1, 0.7)), 1e-10);
}

TEST(Reduce, RandomRoundTrip) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    int n = 1 + static_cast<int>(s % 6);
    GaussianTransform t = random_transform(n, 2.0, 1000 + s);
    BlochMessiahForm f = reduce(t);
    EXPECT_LT(transform_distance(recompose(f), t), 1e-9);
    for (int j = 0; j + 1 < n; ++j) EXPECT_GE(f.r(j), f.r(j + 1));
    EXPECT_GE(f.r.minCoeff(), 0.0);
    ComplexMatrix eye = ComplexMatrix::Identity(n, n);
    EXPECT_LT((f.U * f.U.adjoint() - eye).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((f.V * f.V.adjoint() - eye).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Reduce, DisplacementPassesThroughUntouched) {
  GaussianTransform t = squeezer(2, 0, 0.5, 0.2);
  t.beta = ComplexVector(2);
  t.beta << Complex(1.5, -0.25), Complex(0, 2);
  BlochMessiahForm f = reduce(t);
  EXPECT_EQ((f.beta - t.beta).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_LT(transform_distance(recompose(f), t), 1e-10);
}

TEST(Reduce, DeterministicAcrossCalls) {
  GaussianTransform t = random_transform(5, 1.5, 77);
  BlochMessiahForm a = reduce(t);
  BlochMessiahForm b = reduce(t);
  EXPECT_EQ((a.U - b.U).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((a.V - b.V).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((a.r - b.r).cwiseAbs().maxCoeff(), 0.0);
}

TEST(Reduce, InvalidTransformRejected) {
  GaussianTransform t = identity_transform(2);
  t.B(0, 0) = Complex(0.3, 0);
  EXPECT_THROW(reduce(t), InvalidInputError);
}

TEST(Recompose, RejectsNonUnitaryWitnesses) {
  BlochMessiahForm f;
  f.U = ComplexMatrix::Identity(2, 2) * 2.0;
  f.V = ComplexMatrix::Identity(2, 2);
  f.r = RealVector::Zero(2);
  f.beta = ComplexVector::Zero(2);
  EXPECT_THROW(recompose(f), InvalidInputError);
}

TEST(Spectrum, SingleSqueezerValue) {
  RealVector r = squeeze_spectrum(squeezer(1, 0, 0.8, 1.1));
  ASSERT_EQ(r.size(), 1);
  EXPECT_NEAR(r(0), 0.8, 1e-12);
}

TEST(Spectrum, TwinBeamPairValue) {
  RealVector r = squeeze_spectrum(two_mode_squeezer(2, 0, 1, 0.45));
  EXPECT_NEAR(r(0), 0.45, 1e-12);
  EXPECT_NEAR(r(1), 0.45, 1e-12);
}

TEST(Spectrum, FourModePairProduct) {
  GaussianTransform t = compose(two_mode_squeezer(4, 0, 1, 0.3),
                                two_mode_squeezer(4, 2, 3, 0.3));
  RealVector r = squeeze_spectrum(t);
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(r(j), 0.3, 1e-10);
}

TEST(Spectrum, InvariantUnderPassiveDressing) {
  std::mt19937_64 rng(31);
  GaussianTransform t = random_transform(4, 1.5, 555);
  RealVector base = squeeze_spectrum(t);
  for (int trial = 0; trial < 5; ++trial) {
    GaussianTransform left = multiport(testutil::haar_unitary(4, rng));
    GaussianTransform right = multiport(testutil::haar_unitary(4, rng));
    RealVector dressed = squeeze_spectrum(compose(left, compose(t, right)));
    EXPECT_LT((dressed - base).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Spectrum, PassiveInputIsExactlyZero) {
  std::mt19937_64 rng(33);
  RealVector r = squeeze_spectrum(multiport(testutil::haar_unitary(5, rng)));
  EXPECT_EQ(r.cwiseAbs().maxCoeff(), 0.0);
}

TEST(Spectrum, MatchesSingularValueAngles) {
  GaussianTransform t = random_transform(5, 1.2, 808);
  RealVector r = squeeze_spectrum(t);
  SvdResult s = svd(t.A);
  for (int j = 0; j < 5; ++j)
    EXPECT_NEAR(r(j), std::acosh(s.sigma(j)), 1e-9);
}

TEST(Count, ThresholdSeparatesRealSqueezing) {
  EXPECT_EQ(squeezer_count(identity_transform(3), 1e-6), 0);
  EXPECT_EQ(squeezer_count(two_mode_squeezer(2, 0, 1, 0.5), 1e-6), 2);
  GaussianTransform t = compose(two_mode_squeezer(4, 0, 1, 0.4),
                                two_mode_squeezer(4, 2, 3, 0.9));
  EXPECT_EQ(squeezer_count(t, 1e-6), 4);
  EXPECT_EQ(squeezer_count(t, 0.5), 2);
}
