#include <gtest/gtest.h>

#include "bcx/errors.hpp"
#include "bcx/spectral.hpp"
#include "cli/random_instances.hpp"
#include "oracles.hpp"

using bcx::BCMatrix;
using bcx::Bicomplex;
using bcx::Hyperbolic;

TEST(SpectralDecompose, DiagonalK) {
  const bcx::SpectralDecomposition d = bcx::spectral_decompose(BCMatrix::diagonal({Bicomplex::k()}));
  ASSERT_EQ(d.eigenvalues.size(), 1u);
  EXPECT_EQ(d.eigenvalues[0], (Hyperbolic{0.0, 1.0}));
  EXPECT_EQ(d.eigenvalues[0].a1(), 1.0);
  EXPECT_EQ(d.eigenvalues[0].a2(), -1.0);
  EXPECT_EQ(d.unitary, BCMatrix::identity(1));
  EXPECT_EQ(d.residual, 0.0);
}

TEST(SpectralDecompose, Identity) {
  const bcx::SpectralDecomposition d = bcx::spectral_decompose(BCMatrix::identity(4));
  for (const Hyperbolic& h : d.eigenvalues) EXPECT_EQ(h, (Hyperbolic{1.0, 0.0}));
  EXPECT_EQ(d.unitary, BCMatrix::identity(4));
  EXPECT_EQ(d.residual, 0.0);
}

TEST(SpectralDecompose, Random8x8) {
  bcx::cli::RandomInstances rng(51);
  const BCMatrix t = rng.self_adjoint(8);
  const bcx::SpectralDecomposition d = bcx::spectral_decompose(t);
  EXPECT_LE(d.residual, 1e-10 * (1 + bcx::norm_x(t)));
  // independent reconstruction: T = U* diag(M) U
  const BCMatrix back = bcx::adjoint(d.unitary) * d.diagonal() * d.unitary;
  EXPECT_LE(bcx::norm_x(back - t), 1e-10 * (1 + bcx::norm_x(t)));
  EXPECT_LE(bcx::unitarity_defect(d.unitary), 1e-10);
  EXPECT_LE(bcx::norm_x(bcx::adjoint(d.unitary) * d.unitary - BCMatrix::identity(8)), 1e-10);
}

TEST(SpectralDecompose, EigenvaluesAreHyperbolicAndPaired) {
  bcx::cli::RandomInstances rng(52);
  const BCMatrix t = rng.self_adjoint_with_spectra({-2, 0.5, 3}, {7, -1, 1});
  const bcx::SpectralDecomposition d = bcx::spectral_decompose(t);
  const std::vector<double> s1{-2, 0.5, 3}, s2{-1, 1, 7};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(d.spectrum1[i], s1[i], 1e-12);
    EXPECT_NEAR(d.spectrum2[i], s2[i], 1e-12);
    EXPECT_NEAR(d.eigenvalues[i].a1(), s1[i], 1e-12);
    EXPECT_NEAR(d.eigenvalues[i].a2(), s2[i], 1e-12);
    EXPECT_TRUE(bcx::is_hyperbolic(d.diagonal()(i, i)));
  }
  EXPECT_NEAR(d.component_norm1(), 3.0, 1e-12);
  EXPECT_NEAR(d.component_norm2(), 7.0, 1e-12);
}

TEST(SpectralDecompose, RejectsNonSelfAdjoint) {
  BCMatrix t = BCMatrix::identity(2);
  t(0, 1) = Bicomplex::i();
  t(1, 0) = Bicomplex::i();
  try {
    bcx::spectral_decompose(t);
    FAIL();
  } catch (const bcx::NotSelfAdjointError& e) {
    EXPECT_EQ(e.kind(), bcx::ErrorKind::NotSelfAdjoint);
    EXPECT_NEAR(e.defect(), std::sqrt(8.0), 1e-15);
  }
}
