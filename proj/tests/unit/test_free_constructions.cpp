#include <gtest/gtest.h>

#include <chrono>

#include "antiassoc/errors.hpp"
#include "antiassoc/free_algebras.hpp"
#include "antiassoc/identities.hpp"
#include "antiassoc/monomials.hpp"
#include "oracles.hpp"

using namespace antiassoc;

TEST(FreeAntiAssociative, DimensionsAndGrading) {
  const std::size_t expected[] = {3, 14, 39};
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto start = std::chrono::steady_clock::now();
    const auto g = free_anti_associative(k);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_EQ(g.algebra.dim(), expected[k - 1]);
    EXPECT_LT(secs, 1.0);
    ASSERT_EQ(g.grading.size(), 3u);
    EXPECT_EQ(g.grading[0].dim(), k);
    EXPECT_EQ(g.grading[1].dim(), k * k);
    EXPECT_EQ(g.grading[2].dim(), k * k * k);
    EXPECT_TRUE(check_identity(g.algebra, IdentityKind::AntiAssociative).holds);
    EXPECT_EQ(nilindex(g.algebra), 4u);
  }
}

TEST(FreeAntiAssociative, GradingIsMultiplicative) {
  const auto g = free_anti_associative(2);
  const std::size_t n = g.algebra.dim();
  for (std::size_t d1 = 0; d1 < 3; ++d1) {
    for (std::size_t d2 = 0; d2 < 3; ++d2) {
      for (const auto& x : g.grading[d1].basis()) {
        for (const auto& y : g.grading[d2].basis()) {
          const Vector p = oracle::mul(g.algebra, x, y);
          if (d1 + d2 + 2 > 3) {
            EXPECT_TRUE(oracle::zero(p));
          } else {
            EXPECT_TRUE(g.grading[d1 + d2 + 1].contains(p));
          }
        }
      }
    }
  }
  EXPECT_EQ(n, 14u);
}

TEST(FreeAntiAssociative, AgreesWithQuotientOfFreeMagma) {
  // The relation ideal of the free magma on k letters leaves k^d words in
  // degrees 1..3 and nothing in degree 4.
  for (std::size_t k = 1; k <= 2; ++k) {
    MonomialEngine engine(GeneratorSymmetry::None, {anti_associative_relation()});
    std::size_t power = 1;
    for (std::size_t d = 1; d <= 4; ++d) {
      power *= k;
      std::size_t total = 0;
      for (const auto& alpha : multidegrees(k, d)) total += engine.quotient_dim(alpha);
      EXPECT_EQ(total, d <= 3 ? power : 0u) << "k=" << k << " d=" << d;
    }
  }
}

TEST(FreeAntiAssociative, RejectsBadSizes) {
  EXPECT_THROW(free_anti_associative(0), InputError);
  EXPECT_THROW(free_anti_associative(6), InputError);
}

TEST(FreeCommutative, ShapeAndIdentities) {
  for (std::size_t p = 1; p <= 4; ++p) {
    const auto g = free_commutative_aa(p);
    EXPECT_EQ(g.algebra.dim(), p + p * (p + 1) / 2);
    EXPECT_TRUE(check_identity(g.algebra, IdentityKind::AntiAssociative).holds);
    EXPECT_TRUE(check_identity(g.algebra, IdentityKind::Commutative).holds);
    EXPECT_TRUE(check_identity(g.algebra, IdentityKind::JacobiJordan).holds);
    EXPECT_EQ(nilindex(g.algebra), 3u);
  }
}

TEST(FreeAnticommutative, ShapeAndIdentities) {
  for (std::size_t p = 1; p <= 5; ++p) {
    const auto g = free_anticommutative_aa(p);
    EXPECT_EQ(g.algebra.dim(), p + p * (p - 1) / 2 + p * (p - 1) * (p - 2) / 6);
    EXPECT_TRUE(check_identity(g.algebra, IdentityKind::AntiAssociative).holds) << p;
    EXPECT_TRUE(check_identity(g.algebra, IdentityKind::AntiCommutative).holds) << p;
    EXPECT_LE(*nilindex(g.algebra), 4u);
  }
  EXPECT_EQ(nilindex(free_anticommutative_aa(3).algebra), 4u);
}

TEST(FreeAnticommutative, CubicComponentIsCyclicallyInvariant) {
  // a(bc) = b(ca) = c(ab) in every anticommutative anti-associative algebra.
  const auto g = free_anticommutative_aa(3);
  const Algebra& a = g.algebra;
  const Vector e1 = oracle::basis(7, 0), e2 = oracle::basis(7, 1), e3 = oracle::basis(7, 2);
  const Vector p = oracle::mul(a, e1, oracle::mul(a, e2, e3));
  EXPECT_FALSE(oracle::zero(p));
  EXPECT_EQ(p, oracle::mul(a, e2, oracle::mul(a, e3, e1)));
  EXPECT_EQ(p, oracle::mul(a, e3, oracle::mul(a, e1, e2)));
}

TEST(FreeJacobiJordan, TwoGeneratorComponents) {
  const std::size_t expected[] = {2, 3, 2, 1, 0, 0};
  for (std::size_t d = 1; d <= 6; ++d) {
    EXPECT_EQ(free_jacobi_jordan_component_dim(2, d), expected[d - 1]) << "d=" << d;
  }
  const auto parts = free_jacobi_jordan_component(2, 2);
  std::vector<std::string> words;
  for (const auto& part : parts) {
    for (const auto& w : part.basis) words.push_back(w);
  }
  EXPECT_EQ(words.size(), 3u);
}

TEST(FreeJacobiJordan, OneGenerator) {
  std::size_t total = 0;
  for (std::size_t d = 1; d <= 6; ++d) total += free_jacobi_jordan_component_dim(1, d);
  EXPECT_EQ(total, 2u);
}

TEST(FreeJacobiJordan, DegreeFourComponentIsTheSquareOfXY) {
  const auto parts = free_jacobi_jordan_component(2, 4);
  std::size_t nonzero = 0;
  for (const auto& part : parts) {
    if (part.dim == 0) continue;
    ++nonzero;
    EXPECT_EQ(part.multidegree, (Multidegree{2, 2}));
  }
  EXPECT_EQ(nonzero, 1u);
}

TEST(FreeJacobiJordan, RejectsBadArguments) {
  EXPECT_THROW(free_jacobi_jordan_component_dim(0, 2), InputError);
  EXPECT_THROW(free_jacobi_jordan_component_dim(2, 0), InputError);
  EXPECT_THROW(free_jacobi_jordan_component_dim(2, 7), InputError);
}

TEST(Monomials, ParseFormatRoundTrip) {
  for (const char* w : {"x1", "x1(x2x3)", "(x1x2)x3", "(x1x2)(x3x4)", "x1(x2(x3x4))"}) {
    EXPECT_EQ(tree::format(tree::parse(w)), w);
  }
  EXPECT_THROW(tree::parse("x1(x2"), InputError);
  EXPECT_THROW(tree::parse("y1"), InputError);
}

TEST(Monomials, CanonicalFormsUnderSymmetry) {
  const auto [code, sign] = tree::canonical(tree::parse("(x2x3)x1"), GeneratorSymmetry::AntiCommutative);
  EXPECT_EQ(tree::format(code), "x1(x2x3)");
  EXPECT_EQ(sign, -1);
  EXPECT_EQ(tree::canonical(tree::parse("x1x1"), GeneratorSymmetry::AntiCommutative).second, 0);
  const auto comm = tree::canonical(tree::parse("(x3x2)x1"), GeneratorSymmetry::Commutative);
  EXPECT_EQ(tree::format(comm.first), "x1(x2x3)");
  EXPECT_EQ(comm.second, 1);
}

TEST(Monomials, PolynomialParse) {
  const auto p = parse_polynomial("x1(x2x3) - 1/2 x3(x1x2) + 2*(x1x2)x3");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.at(tree::parse("x3(x1x2)")), Rational(-1, 2));
  EXPECT_EQ(p.at(tree::parse("(x1x2)x3")), 2);
  EXPECT_EQ(parse_polynomial(format(p)), p);
}

TEST(Monomials, MultidegreeEnumeration) {
  EXPECT_EQ(multidegrees(2, 3).size(), 4u);
  EXPECT_EQ(multidegrees(3, 2).size(), 6u);
  EXPECT_EQ(splittings(Multidegree{1, 1, 1}).size(), 6u);
}

TEST(Monomials, CatalanCountsWithoutRelations) {
  MonomialEngine engine(GeneratorSymmetry::None, {});
  // multilinear monomials in n letters: n! * Catalan(n-1)
  EXPECT_EQ(engine.monomials(Multidegree{1, 1}).size(), 2u);
  EXPECT_EQ(engine.monomials(Multidegree{1, 1, 1}).size(), 12u);
  EXPECT_EQ(engine.monomials(Multidegree{1, 1, 1, 1}).size(), 120u);
}
