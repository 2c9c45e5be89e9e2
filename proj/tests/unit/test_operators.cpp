#include <gtest/gtest.h>

#include "antiassoc/errors.hpp"
#include "antiassoc/fixtures.hpp"
#include "antiassoc/free_algebras.hpp"
#include "antiassoc/identities.hpp"
#include "antiassoc/operators.hpp"
#include "oracles.hpp"

using namespace antiassoc;

namespace {

std::vector<const Fixture*> anti_associative_fixtures(std::size_t max_dim) {
  std::vector<const Fixture*> out;
  for (const auto& f : fixtures()) {
    if (f.algebra.dim() <= max_dim && check_identity(f.algebra, IdentityKind::AntiAssociative).holds) {
      out.push_back(&f);
    }
  }
  return out;
}

}  // namespace

TEST(Operators, LeftAndRightMultiplication) {
  oracle::Rng rng(31);
  const Algebra& a = fixture("dim3-aa-b").algebra;
  for (int trial = 0; trial < 10; ++trial) {
    const Vector x = rng.vector(3), y = rng.vector(3);
    EXPECT_EQ(left_mult(a, x).apply(y), oracle::mul(a, x, y));
    EXPECT_EQ(right_mult(a, x).apply(y), oracle::mul(a, y, x));
  }
}

TEST(Operators, SpaceDimensionsAgreeWithOracle) {
  for (const auto& f : fixtures()) {
    if (f.algebra.dim() > 7) continue;
    EXPECT_EQ(derivation_space(f.algebra).dim(), oracle::operator_space_dim(f.algebra, -1)) << f.name;
    EXPECT_EQ(anti_derivation_space(f.algebra).dim(), oracle::operator_space_dim(f.algebra, 1)) << f.name;
  }
}

TEST(Operators, AntiDerivationsSatisfyDefiningIdentity) {
  oracle::Rng rng(32);
  for (const auto* fx : anti_associative_fixtures(7)) {
    const Algebra& a = fx->algebra;
    const std::size_t n = a.dim();
    for (const auto& f : endo_basis(anti_derivation_space(a), n)) {
      const Vector x = rng.vector(n), y = rng.vector(n);
      Vector v = f.apply(oracle::mul(a, x, y));
      v = oracle::plus(v, oracle::mul(a, f.apply(x), y));
      v = oracle::plus(v, oracle::mul(a, x, f.apply(y)));
      EXPECT_TRUE(oracle::zero(v)) << fx->name;
    }
  }
}

TEST(Operators, FreeAlgebraDerivationCounts) {
  // Oracle values: the generator part is forced to a multiple of the
  // identity, the degree >= 2 part of each f(e_i) is free.
  const Algebra& faa1 = fixture("faa1").algebra;
  EXPECT_EQ(anti_derivation_space(faa1).dim(), 3u);
  EXPECT_EQ(derivation_space(faa1).dim(), 3u);
  const Algebra& faa2 = fixture("faa2").algebra;
  EXPECT_EQ(anti_derivation_space(faa2).dim(), 25u);
  EXPECT_EQ(oracle::operator_space_dim(faa2, 1), 25u);
}

TEST(Operators, InnerAntiDerivations) {
  // In F_AA(1) the square X^2 gives L+R = 0, so only L_X + R_X survives.
  EXPECT_EQ(inner_anti_derivations(fixture("faa1").algebra).dim(), 1u);
  EXPECT_EQ(inner_anti_derivations(fixture("faa2").algebra).dim(), 6u);
  EXPECT_EQ(inner_anti_derivations(free_anti_associative(3).algebra).dim(), 12u);
  const Algebra not_aa(StructureTable{{Vector{1}}});
  EXPECT_THROW(inner_anti_derivations(not_aa), DomainError);
}

TEST(Operators, InnerAntiDerivationsAreAntiDerivations) {
  for (const auto* fx : anti_associative_fixtures(14)) {
    const Algebra& a = fx->algebra;
    EXPECT_TRUE(anti_derivation_space(a).contains(inner_anti_derivations(a))) << fx->name;
    oracle::Rows rows;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      rows.push_back(flatten(inner_anti_derivation(a, oracle::basis(a.dim(), i))));
    }
    EXPECT_EQ(inner_anti_derivations(a).dim(), oracle::rank(rows)) << fx->name;
  }
}

TEST(Operators, SymmetricProductOfInnerAntiDerivations) {
  // ad(x) . ad(y) = -ad(xy + yx) on basis pairs.
  for (const auto* fx : anti_associative_fixtures(14)) {
    const Algebra& a = fx->algebra;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Vector x = oracle::basis(n, i), y = oracle::basis(n, j);
        const Endo lhs = symmetric_product(inner_anti_derivation(a, x), inner_anti_derivation(a, y));
        const Vector s = oracle::plus(oracle::mul(a, x, y), oracle::mul(a, y, x));
        EXPECT_EQ(lhs, inner_anti_derivation(a, s) * Rational(-1)) << fx->name << " " << i << "," << j;
      }
    }
  }
}

TEST(Operators, CommutatorOfAntiDerivationsIsDerivation) {
  for (const auto* fx : anti_associative_fixtures(7)) {
    const Algebra& a = fx->algebra;
    const auto basis = endo_basis(anti_derivation_space(a), a.dim());
    const Subspace d = derivation_space(a);
    for (const auto& f : basis) {
      for (const auto& g : basis) EXPECT_TRUE(d.contains(flatten(commutator(f, g)))) << fx->name;
    }
  }
}

TEST(Operators, BracketWithInnerAntiDerivationUnderDerivations) {
  // [ad(x), f] = -ad(f(x)) for derivations f.
  for (const auto* fx : anti_associative_fixtures(7)) {
    const Algebra& a = fx->algebra;
    const std::size_t n = a.dim();
    for (const auto& f : endo_basis(derivation_space(a), n)) {
      for (std::size_t i = 0; i < n; ++i) {
        const Vector x = oracle::basis(n, i);
        EXPECT_EQ(commutator(inner_anti_derivation(a, x), f),
                  inner_anti_derivation(a, f.apply(x)) * Rational(-1))
            << fx->name;
      }
    }
  }
}

TEST(Operators, BracketRelationFailsForSomeAntiDerivation) {
  const Algebra& a = fixture("faa1").algebra;
  bool some_failure = false;
  for (const auto& f : endo_basis(anti_derivation_space(a), 3)) {
    const Vector x = oracle::basis(3, 0);
    if (commutator(inner_anti_derivation(a, x), f) != inner_anti_derivation(a, f.apply(x)) * Rational(-1)) {
      some_failure = true;
    }
  }
  EXPECT_TRUE(some_failure);
}

TEST(Operators, DerivationAntiDerivationIntersectionKillsProducts) {
  for (const auto* fx : anti_associative_fixtures(7)) {
    const Algebra& a = fx->algebra;
    const std::size_t n = a.dim();
    const Subspace both = derivation_anti_derivation_intersection(a);
    EXPECT_EQ(both, subspace_intersection(derivation_space(a), anti_derivation_space(a))) << fx->name;
    for (const auto& f : endo_basis(both, n)) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          EXPECT_TRUE(oracle::zero(f.apply(a.product(i, j)))) << fx->name;
        }
      }
    }
  }
}

TEST(Operators, MultiplicationAlgebrasOfFreeAlgebra) {
  const Algebra& a = fixture("faa1").algebra;
  const auto m = multiplication_algebra(a);
  EXPECT_EQ(m.dim, 3u);
  ASSERT_TRUE(m.nilindex.has_value());
  EXPECT_LE(*m.nilindex, 3u);
  const auto l = lie_multiplication_algebra(a);
  EXPECT_EQ(l.dim, 3u);
  EXPECT_TRUE(l.two_step_nilpotent);
  EXPECT_EQ(l.derived_dim, 1u);
}

TEST(Operators, MultiplicationAlgebraIsClosed) {
  for (const auto* fx : anti_associative_fixtures(5)) {
    const Algebra& a = fx->algebra;
    const std::size_t n = a.dim();
    const auto m = multiplication_algebra(a);
    const auto basis = endo_basis(m.span, n);
    for (const auto& f : basis) {
      for (const auto& g : basis) EXPECT_TRUE(m.span.contains(flatten(f * g))) << fx->name;
    }
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_TRUE(m.span.contains(flatten(left_mult(a, oracle::basis(n, i)))));
      EXPECT_TRUE(m.span.contains(flatten(right_mult(a, oracle::basis(n, i)))));
    }
  }
}

TEST(Operators, FlattenRoundTrip) {
  oracle::Rng rng(33);
  const Matrix m = rng.matrix(4);
  EXPECT_EQ(unflatten(flatten(m), 4), m);
  EXPECT_THROW(unflatten(Vector(5), 2), InputError);
}
