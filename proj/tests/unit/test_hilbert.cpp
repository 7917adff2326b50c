#include <gtest/gtest.h>

#include <cmath>

#include "bcx/errors.hpp"
#include "bcx/hilbert.hpp"
#include "cli/random_instances.hpp"
#include "oracles.hpp"

using bcx::BCVector;
using bcx::Bicomplex;
using bcx::Complex;
using bcx::ComplexVector;

namespace {

double distance(const Bicomplex& a, const Bicomplex& b) { return oracle::quadruple_norm(a - b); }

ComplexVector cv(std::initializer_list<Complex> xs) {
  ComplexVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Complex& x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST(VecSplit, Examples) {
  const auto [a1, a2] = bcx::vec_split(BCVector{Bicomplex::one(), Bicomplex::k()});
  EXPECT_EQ(a1.component, bcx::Component::First);
  EXPECT_EQ(a2.component, bcx::Component::Second);
  EXPECT_EQ(a1.entries, cv({1.0, 1.0}));
  EXPECT_EQ(a2.entries, cv({1.0, -1.0}));

  const auto [b1, b2] = bcx::vec_split(BCVector{Bicomplex::i() + Bicomplex::j(), Bicomplex::zero()});
  EXPECT_EQ(b1.entries, cv({0.0, 0.0}));
  EXPECT_EQ(b2.entries, cv({Complex(0, 2), 0.0}));
}

TEST(VecSplit, RoundTrip) {
  bcx::cli::RandomInstances rng(21);
  for (int t = 0; t < 200; ++t) {
    const BCVector x = rng.vector(rng.index(1, 12));
    const auto [x1, x2] = bcx::vec_split(x);
    const BCVector y = bcx::vec_join(x1, x2);
    ASSERT_EQ(y.size(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) ASSERT_LE(distance(x[i], y[i]), 1e-15 * (1 + bcx::modulus(x[i])));
  }
}

TEST(VecJoin, LengthMismatch) {
  try {
    bcx::vec_join(ComplexVector::Zero(2), ComplexVector::Zero(3));
    FAIL();
  } catch (const bcx::Error& e) {
    EXPECT_EQ(e.kind(), bcx::ErrorKind::DimensionMismatch);
  }
}

TEST(Inner, Examples) {
  for (std::size_t i = 0; i < 4; ++i) {
    const BCVector b = BCVector::basis(4, i);
    EXPECT_EQ(bcx::inner(b, b), Bicomplex::one());
  }
  const BCVector e1{Bicomplex::e1()};
  EXPECT_EQ(bcx::inner(e1, e1), Bicomplex::e1());
  EXPECT_TRUE(bcx::hyperbolic_is_nonneg(bcx::hyperbolic_part(bcx::inner(e1, e1))));
  EXPECT_TRUE(bcx::is_zero_divisor(bcx::inner(e1, e1)));
}

TEST(Inner, LengthMismatch) {
  EXPECT_THROW(bcx::inner(BCVector(2), BCVector(3)), bcx::Error);
}

TEST(Inner, SplitsIntoComponentInnerProducts) {
  bcx::cli::RandomInstances rng(22);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rng.index(1, 16);
    const BCVector x = rng.vector(n), y = rng.vector(n);
    const auto [x1, x2] = bcx::vec_split(x);
    const auto [y1, y2] = bcx::vec_split(y);
    const bcx::IdempotentPair p = bcx::idempotent_split(bcx::inner(x, y));
    // Eigen's dot is conjugate-linear in the first argument
    const Complex c1 = y1.entries.dot(x1.entries), c2 = y2.entries.dot(x2.entries);
    const double scale = x1.entries.norm() * y1.entries.norm() + x2.entries.norm() * y2.entries.norm();
    ASSERT_LE(std::abs(p.w1 - c1), 1e-13 * scale);
    ASSERT_LE(std::abs(p.w2 - c2), 1e-13 * scale);
  }
}

TEST(Inner, Axioms) {
  bcx::cli::RandomInstances rng(23);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rng.index(1, 32);
    const BCVector x = rng.vector(n), y = rng.vector(n), z = rng.vector(n);
    const Bicomplex alpha = rng.bicomplex();
    const double s = bcx::norm_real(x) + bcx::norm_real(y) + bcx::norm_real(z);
    const double scale = s * s * (1 + bcx::modulus(alpha));
    ASSERT_LE(distance(bcx::inner(x + y, z), bcx::inner(x, z) + bcx::inner(y, z)), 1e-12 * scale);
    ASSERT_LE(distance(bcx::inner(alpha * x, y), alpha * bcx::inner(x, y)), 1e-12 * scale);
    ASSERT_LE(distance(bcx::inner(x, alpha * y), bcx::conj_star(alpha) * bcx::inner(x, y)), 1e-12 * scale);
    ASSERT_LE(distance(bcx::inner(x, y), bcx::conj_star(bcx::inner(y, x))), 1e-12 * scale);
    const Bicomplex xx = bcx::inner(x, x);
    ASSERT_TRUE(bcx::is_hyperbolic(xx));
    ASSERT_TRUE(bcx::hyperbolic_is_nonneg(bcx::hyperbolic_part(xx)));
  }
}

TEST(Inner, DefiniteOnlyAtZero) {
  const BCVector zero(3);
  EXPECT_EQ(bcx::inner(zero, zero), Bicomplex::zero());
  // a zero-divisor vector is nonzero and <x, x> is nonzero too
  const BCVector x{Bicomplex::e2(), Bicomplex::zero()};
  EXPECT_NE(bcx::inner(x, x), Bicomplex::zero());
}

TEST(Norms, Examples) {
  EXPECT_EQ(bcx::norm_hyperbolic(BCVector(3)), (bcx::Hyperbolic{0.0, 0.0}));
  const bcx::Hyperbolic ne1 = bcx::norm_hyperbolic(BCVector{Bicomplex::e1()});
  EXPECT_DOUBLE_EQ(ne1.a1(), 1.0);
  EXPECT_DOUBLE_EQ(ne1.a2(), 0.0);
  const bcx::Hyperbolic nk = bcx::norm_hyperbolic(BCVector{Bicomplex::one(), Bicomplex::k()});
  EXPECT_DOUBLE_EQ(nk.h1, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(nk.h2, 0.0);
  EXPECT_DOUBLE_EQ(bcx::norm_real(BCVector{Bicomplex::one()}), 1.0);
  EXPECT_DOUBLE_EQ(bcx::norm_real(BCVector{Bicomplex::e1()}), 1.0 / std::sqrt(2.0));
}

TEST(Norms, RelationBetweenHyperbolicAndRealNorm) {
  bcx::cli::RandomInstances rng(24);
  for (int t = 0; t < 2000; ++t) {
    const BCVector x = rng.vector(rng.index(1, 64));
    const double real = bcx::norm_real(x);
    ASSERT_LE(std::abs(bcx::modulus(bcx::embed(bcx::norm_hyperbolic(x))) - real), 1e-12 * real);
    double quad = 0.0;
    for (const auto& w : x) quad += oracle::quadruple_norm(w) * oracle::quadruple_norm(w);
    ASSERT_LE(std::abs(std::sqrt(quad) - real), 1e-12 * real);
  }
}

TEST(Orthonormalize, ScaledUnitVector) {
  const BCVector u{Bicomplex(0.6, 0, 0, 0), Bicomplex(0, 0.8, 0, 0)};
  const bcx::ComponentwiseBasis b = bcx::orthonormalize_componentwise({2.0 * u});
  ASSERT_EQ(b.rank1(), 1u);
  ASSERT_EQ(b.rank2(), 1u);
  ASSERT_EQ(b.vectors.size(), 1u);
  const auto [u1, u2] = bcx::vec_split(u);
  // equal up to a unimodular phase
  EXPECT_NEAR(std::abs(u1.entries.dot(b.first[0])), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(u2.entries.dot(b.second[0])), 1.0, 1e-15);
  EXPECT_NEAR(bcx::norm_real(b.vectors[0]), 1.0, 1e-15);
}

TEST(Orthonormalize, DependentInputGivesOneVectorPerComponent) {
  bcx::cli::RandomInstances rng(25);
  const BCVector u = rng.vector(4);
  const bcx::ComponentwiseBasis b = bcx::orthonormalize_componentwise({u, u});
  EXPECT_EQ(b.rank1(), 1u);
  EXPECT_EQ(b.rank2(), 1u);
}

TEST(Orthonormalize, MatchesClassicalGramSchmidt) {
  const BCVector a{Bicomplex::one(), Bicomplex::zero()};
  const BCVector c{Bicomplex::one(), Bicomplex::one()};
  const bcx::ComponentwiseBasis b = bcx::orthonormalize_componentwise({a, c});
  const auto [a1, a2] = bcx::vec_split(a);
  const auto [c1, c2] = bcx::vec_split(c);
  const auto g1 = oracle::classical_gram_schmidt({a1.entries, c1.entries}, 1e-10);
  const auto g2 = oracle::classical_gram_schmidt({a2.entries, c2.entries}, 1e-10);
  ASSERT_EQ(b.rank1(), g1.size());
  ASSERT_EQ(b.rank2(), g2.size());
  for (std::size_t i = 0; i < g1.size(); ++i) EXPECT_LE((b.first[i] - g1[i]).norm(), 1e-15);
  for (std::size_t i = 0; i < g2.size(); ++i) EXPECT_LE((b.second[i] - g2[i]).norm(), 1e-15);
  EXPECT_EQ(b.first[1], cv({0.0, 1.0}));
}

TEST(Orthonormalize, RandomAgainstClassicalGramSchmidt) {
  bcx::cli::RandomInstances rng(26);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = rng.index(2, 10);
    const std::size_t m = rng.index(1, n);
    std::vector<BCVector> vs;
    for (std::size_t i = 0; i < m; ++i) vs.push_back(rng.vector(n));
    const bcx::ComponentwiseBasis b = bcx::orthonormalize_componentwise(vs);
    std::vector<ComplexVector> c1, c2;
    for (const auto& v : vs) {
      const auto [v1, v2] = bcx::vec_split(v);
      c1.push_back(v1.entries);
      c2.push_back(v2.entries);
    }
    const auto g1 = oracle::classical_gram_schmidt(c1, 1e-10);
    const auto g2 = oracle::classical_gram_schmidt(c2, 1e-10);
    ASSERT_EQ(b.rank1(), g1.size());
    ASSERT_EQ(b.rank2(), g2.size());
    for (std::size_t i = 0; i < g1.size(); ++i) ASSERT_LE((b.first[i] - g1[i]).norm(), 1e-10);
    for (std::size_t i = 0; i < g2.size(); ++i) ASSERT_LE((b.second[i] - g2[i]).norm(), 1e-10);
  }
}

TEST(Orthonormalize, ComponentRanksMayDiffer) {
  // second vector is a multiple of the first in component 2 only
  const BCVector a{Bicomplex::one(), Bicomplex::zero()};
  const BCVector c{Bicomplex::e2(), Bicomplex::e1()};
  const bcx::ComponentwiseBasis b = bcx::orthonormalize_componentwise({a, c});
  EXPECT_EQ(b.rank1(), 2u);
  EXPECT_EQ(b.rank2(), 1u);
  ASSERT_EQ(b.vectors.size(), 2u);
  const auto [v1, v2] = bcx::vec_split(b.vectors[1]);
  EXPECT_EQ(v2.entries, ComplexVector::Zero(2));
  EXPECT_NEAR(v1.entries.norm(), 1.0, 1e-15);
}
