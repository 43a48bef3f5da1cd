#include <gtest/gtest.h>

#include <cmath>

#include "supent/error.hpp"
#include "supent/qmath.hpp"
#include "test_util.hpp"

namespace supent {
namespace {

using harness::Rng;

using testing::kind_of;

TEST(ComplexMatrix, RejectsBadShapesAndNonFinite) {
  EXPECT_EQ(kind_of([] { ComplexMatrix(2, 2, {1.0, 2.0, 3.0}); }), ErrorKind::DimError);
  EXPECT_EQ(kind_of([] { ComplexMatrix(1, 2, {1.0, Complex(NAN, 0.0)}); }), ErrorKind::DomainError);
}

TEST(ComplexMatrix, ProductAndAdjoint) {
  const ComplexMatrix a(2, 2, {1.0, Complex(0, 1), 2.0, 3.0});
  const ComplexMatrix id = ComplexMatrix::identity(2);
  EXPECT_EQ((a * id).max_abs_diff(a), 0.0);
  const ComplexMatrix ah = a.adjoint();
  EXPECT_EQ(ah(0, 1), 2.0);
  EXPECT_EQ(ah(1, 0), Complex(0, -1));
  EXPECT_DOUBLE_EQ(a.frobenius_norm_sq(), 1 + 1 + 4 + 9);
  EXPECT_EQ(a.trace(), Complex(4.0));
}

TEST(HermitianEigenvalues, Identity) {
  const Spectrum s = hermitian_eigenvalues(ComplexMatrix::identity(2));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s[0], 1.0, 1e-14);
  EXPECT_NEAR(s[1], 1.0, 1e-14);
}

TEST(HermitianEigenvalues, RankOneProjector) {
  const Spectrum s = hermitian_eigenvalues(ComplexMatrix(2, 2, {0.5, 0.5, 0.5, 0.5}));
  EXPECT_NEAR(s[0], 1.0, 1e-14);
  EXPECT_EQ(s[1], 0.0);
}

TEST(HermitianEigenvalues, CharacteristicPolynomialOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix h = testing::random_hermitian(4, rng);
    const Spectrum s = hermitian_eigenvalues(h);
    double sum = 0.0;
    for (double v : s.values()) sum += v;
    EXPECT_NEAR(sum, h.trace().real(), 1e-10);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) EXPECT_GE(s[i], s[i + 1]);
    for (double v : s.values()) {
      ComplexMatrix shifted = h;
      for (std::size_t k = 0; k < 4; ++k) shifted(k, k) -= v;
      EXPECT_LE(std::abs(testing::determinant(shifted)), 1e-8) << "lambda = " << v;
    }
  }
}

TEST(HermitianEigenvalues, Errors) {
  EXPECT_EQ(kind_of([] { hermitian_eigenvalues(ComplexMatrix(2, 3)); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { hermitian_eigenvalues(ComplexMatrix(2, 2, {1.0, 1.0, 0.0, 1.0})); }),
            ErrorKind::NotHermitian);
}

TEST(HermitianEigenvalues, ClipsTinyNegatives) {
  const Spectrum s = hermitian_eigenvalues(ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1e-12}));
  EXPECT_EQ(s[1], 0.0);
}

TEST(SingularValues, BellCoefficients) {
  const double h = 1.0 / std::sqrt(2.0);
  const Spectrum s = singular_values(ComplexMatrix(2, 2, {h, 0.0, 0.0, h}));
  EXPECT_NEAR(s[0], h, 1e-15);
  EXPECT_NEAR(s[1], h, 1e-15);
}

TEST(SingularValues, PaddedDiagonal) {
  ComplexMatrix c(3, 4);
  c(0, 0) = std::sqrt(0.5);
  c(1, 1) = 0.5;
  c(2, 2) = 0.5;
  const Spectrum s = singular_values(c);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_NEAR(s[0], std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(s[1], 0.5, 1e-15);
  EXPECT_NEAR(s[2], 0.5, 1e-15);
}

TEST(SingularValues, SquaresMatchGramEigenvalues) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix c = testing::random_matrix(3, 5, rng);
    const Spectrum s = singular_values(c);
    const Spectrum ev = hermitian_eigenvalues(c * c.adjoint());
    ASSERT_EQ(s.size(), ev.size());
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(s[i] * s[i], ev[i], 1e-10);
  }
}

TEST(Svd, ReconstructsWideAndTall) {
  Rng rng(13);
  for (auto [r, c] : {std::pair{3, 5}, std::pair{5, 3}, std::pair{4, 4}, std::pair{1, 6}}) {
    const ComplexMatrix m = testing::random_matrix(r, c, rng);
    const SingularValueDecomposition d = svd(m);
    ComplexMatrix sig(d.sigma.size(), d.sigma.size());
    for (std::size_t i = 0; i < d.sigma.size(); ++i) sig(i, i) = d.sigma[i];
    EXPECT_LE((d.u * sig * d.v.adjoint()).max_abs_diff(m), 1e-12);
    const auto k = d.sigma.size();
    EXPECT_LE((d.u.adjoint() * d.u).max_abs_diff(ComplexMatrix::identity(k)), 1e-12);
    EXPECT_LE((d.v.adjoint() * d.v).max_abs_diff(ComplexMatrix::identity(k)), 1e-12);
  }
}

TEST(ShannonEntropy, Values) {
  EXPECT_EQ(shannon_entropy(Spectrum({1.0})), 0.0);
  EXPECT_NEAR(shannon_entropy(Spectrum({0.5, 0.5})), 1.0, 1e-15);
  EXPECT_NEAR(shannon_entropy(Spectrum({1.0 / 3, 1.0 / 3, 1.0 / 3})), 1.5849625007211563, 1e-12);
  EXPECT_NEAR(shannon_entropy(Spectrum({1.0, 0.0})), 0.0, 0.0);
}

TEST(ShannonEntropy, Errors) {
  EXPECT_EQ(kind_of([] { shannon_entropy(Spectrum({0.5, 0.4})); }), ErrorKind::NotNormalized);
  EXPECT_EQ(kind_of([] { shannon_entropy(Spectrum({1.1, -0.1})); }), ErrorKind::DomainError);
}

TEST(BinaryEntropy, Values) {
  EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(1.0 / 50), 0.1414405425418, 1e-12);
  EXPECT_NEAR(binary_entropy(0.3), binary_entropy(0.7), 1e-15);
}

TEST(BinaryEntropy, Domain) {
  EXPECT_NO_THROW(binary_entropy(-1e-13));
  EXPECT_EQ(kind_of([] { binary_entropy(1.0 + 1e-9); }), ErrorKind::DomainError);
  EXPECT_EQ(kind_of([] { binary_entropy(-0.1); }), ErrorKind::DomainError);
}

TEST(Spectrum, SortsAndNormalizes) {
  const Spectrum s({0.1, 0.3, 0.2});
  EXPECT_EQ(s[0], 0.3);
  EXPECT_EQ(s[2], 0.1);
  EXPECT_NEAR(s.trace(), 0.6, 1e-15);
  EXPECT_NEAR(s.normalized().trace(), 1.0, 1e-15);
  EXPECT_EQ(kind_of([] { Spectrum({0.0, 0.0}).normalized(); }), ErrorKind::ZeroState);
}

}  // namespace
}  // namespace supent
