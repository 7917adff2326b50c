#include <gtest/gtest.h>

#include "bcx/errors.hpp"
#include "bcx/operator.hpp"
#include "cli/random_instances.hpp"
#include "oracles.hpp"

using bcx::BCMatrix;
using bcx::BCVector;
using bcx::Bicomplex;
using bcx::ComplexMatrix;

namespace {

double distance(const Bicomplex& a, const Bicomplex& b) { return oracle::quadruple_norm(a - b); }

}  // namespace

TEST(Adjoint, Examples) {
  EXPECT_EQ(bcx::adjoint(BCMatrix::identity(3)), BCMatrix::identity(3));
  const BCMatrix dk = BCMatrix::diagonal({Bicomplex::k(), Bicomplex::k()});
  EXPECT_EQ(bcx::adjoint(dk), dk);
  EXPECT_TRUE(bcx::is_self_adjoint(dk));
}

TEST(Adjoint, Involution) {
  bcx::cli::RandomInstances rng(31);
  for (int t = 0; t < 50; ++t) {
    const BCMatrix a = rng.matrix(rng.index(1, 8));
    EXPECT_EQ(bcx::adjoint(bcx::adjoint(a)), a);
  }
}

TEST(Adjoint, EntryDefinition) {
  BCMatrix a(2);
  a(0, 1) = Bicomplex(1, 2, 3, 4);
  const BCMatrix s = bcx::adjoint(a);
  EXPECT_EQ(s(1, 0), Bicomplex(1, -2, -3, 4));
  EXPECT_EQ(s(0, 1), Bicomplex::zero());
}

TEST(Adjoint, PairingIdentity) {
  bcx::cli::RandomInstances rng(32);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rng.index(1, 16);
    const BCMatrix a = rng.matrix(n);
    const BCVector x = rng.vector(n), y = rng.vector(n);
    const double scale = bcx::norm_x(a) * bcx::norm_real(x) * bcx::norm_real(y);
    ASSERT_LE(distance(bcx::inner(x, a * y), bcx::inner(bcx::adjoint(a) * x, y)), 1e-11 * scale);
  }
}

TEST(SelfAdjoint, Examples) {
  EXPECT_TRUE(bcx::is_self_adjoint(BCMatrix::identity(4)));
  EXPECT_FALSE(bcx::is_self_adjoint(BCMatrix::diagonal({Bicomplex::i()})));
  EXPECT_FALSE(bcx::is_self_adjoint(BCMatrix::diagonal({Bicomplex::j()})));
  bcx::cli::RandomInstances rng(33);
  for (int t = 0; t < 50; ++t) {
    const BCMatrix a = rng.matrix(rng.index(1, 10));
    EXPECT_TRUE(bcx::is_self_adjoint(a + bcx::adjoint(a)));
  }
}

TEST(SelfAdjoint, ToleranceIsRelative) {
  BCMatrix a = 1e6 * BCMatrix::identity(2);
  a(0, 1) = Bicomplex(0, 0, 0, 1e-8);
  a(1, 0) = Bicomplex(0, 0, 0, 0.0);
  // defect 1e-8 against 1e-12·(1 + 2e6): accepted
  EXPECT_TRUE(bcx::is_self_adjoint(a));
  a(0, 1) = Bicomplex(0, 0, 0, 1e-4);
  EXPECT_FALSE(bcx::is_self_adjoint(a));
}

TEST(OpSplit, Examples) {
  const auto [i1, i2] = bcx::op_split(BCMatrix::identity(3));
  EXPECT_EQ(i1, ComplexMatrix::Identity(3, 3));
  EXPECT_EQ(i2, ComplexMatrix::Identity(3, 3));
  const auto [k1, k2] = bcx::op_split(BCMatrix::diagonal({Bicomplex::k(), Bicomplex::k()}));
  EXPECT_EQ(k1, ComplexMatrix::Identity(2, 2));
  EXPECT_EQ(k2, -ComplexMatrix::Identity(2, 2));
}

TEST(OpSplit, RoundTripAndHomomorphism) {
  bcx::cli::RandomInstances rng(34);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng.index(1, 8);
    const BCMatrix a = rng.matrix(n), b = rng.matrix(n);
    const auto [a1, a2] = bcx::op_split(a);
    const auto [b1, b2] = bcx::op_split(b);
    ASSERT_LE(bcx::norm_x(bcx::op_join(a1, a2) - a), 1e-15 * bcx::norm_x(a));
    const auto [p1, p2] = bcx::op_split(a * b);
    const double scale = bcx::norm_x(a) * bcx::norm_x(b);
    ASSERT_LE((p1 - a1 * b1).norm(), 1e-13 * scale);
    ASSERT_LE((p2 - a2 * b2).norm(), 1e-13 * scale);
    const auto [s1, s2] = bcx::op_split(bcx::adjoint(a));
    ASSERT_LE((s1 - a1.adjoint()).norm(), 1e-15 * bcx::norm_x(a));
    ASSERT_LE((s2 - a2.adjoint()).norm(), 1e-15 * bcx::norm_x(a));
  }
}

TEST(OpJoin, DimensionMismatch) {
  try {
    bcx::op_join(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3));
    FAIL();
  } catch (const bcx::Error& e) {
    EXPECT_EQ(e.kind(), bcx::ErrorKind::DimensionMismatch);
  }
  EXPECT_THROW(bcx::op_join(ComplexMatrix::Zero(2, 3), ComplexMatrix::Zero(2, 3)), bcx::Error);
  EXPECT_THROW(BCMatrix(2, std::vector<Bicomplex>(3)), bcx::Error);
  EXPECT_THROW(BCMatrix(2) * BCVector(3), bcx::Error);
}
