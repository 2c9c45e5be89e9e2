#include <gtest/gtest.h>

#include "antiassoc/cohomology.hpp"
#include "antiassoc/deformation.hpp"
#include "antiassoc/errors.hpp"
#include "antiassoc/fixtures.hpp"
#include "antiassoc/identities.hpp"
#include "antiassoc/operators.hpp"
#include "oracles.hpp"

using namespace antiassoc;

namespace {

using antiassoc::MultilinearMap;

// R_1 = mu(phi(a,b),c) + mu(a,phi(b,c)) + phi(mu(a,b),c) + phi(a,mu(b,c))
Vector first_residual(const Algebra& a, const MultilinearMap& phi, const Vector& x, const Vector& y,
                      const Vector& z) {
  Vector r = oracle::mul(a, oracle::eval(phi, {x, y}), z);
  r = oracle::plus(r, oracle::mul(a, x, oracle::eval(phi, {y, z})));
  r = oracle::plus(r, oracle::eval(phi, {oracle::mul(a, x, y), z}));
  return oracle::plus(r, oracle::eval(phi, {x, oracle::mul(a, y, z)}));
}

MultilinearMap unit_cochain(std::size_t n, std::size_t flat) {
  MultilinearMap m(2, n);
  m.at(flat / n)[flat % n] = 1;
  return m;
}

// Rank of phi -> R_1(phi) over the chosen cochain basis.
std::size_t first_order_solution_dim(const Algebra& a, const std::vector<MultilinearMap>& basis) {
  const std::size_t n = a.dim();
  oracle::Rows cols;
  for (const auto& phi : basis) {
    std::vector<Rational> col;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const Vector r = first_residual(a, phi, oracle::basis(n, i), oracle::basis(n, j), oracle::basis(n, k));
          col.insert(col.end(), r.begin(), r.end());
        }
      }
    }
    cols.push_back(col);
  }
  return basis.size() - oracle::rank(cols);
}

}  // namespace

TEST(Deformation, ResidualsMatchFormula) {
  oracle::Rng rng(51);
  const Algebra& a = fixture("dim3-aa-b").algebra;
  const auto phi1 = rng.multilinear(2, 3), phi2 = rng.multilinear(2, 3);
  const auto rs = deformation_residuals(a, {phi1, phi2}, 2);
  ASSERT_EQ(rs.size(), 2u);
  const auto mu = MultilinearMap::from_algebra(a);
  for (int trial = 0; trial < 5; ++trial) {
    const Vector x = rng.vector(3), y = rng.vector(3), z = rng.vector(3);
    EXPECT_EQ(oracle::eval(rs[0], {x, y, z}), first_residual(a, phi1, x, y, z));
    // R_2 = sum over i + j = 2 of phi_i(phi_j(x,y),z) + phi_i(x,phi_j(y,z))
    Vector r2(3);
    const MultilinearMap* phis[] = {&mu, &phi1, &phi2};
    for (std::size_t i = 0; i <= 2; ++i) {
      const auto& pi = *phis[i];
      const auto& pj = *phis[2 - i];
      r2 = oracle::plus(r2, oracle::eval(pi, {oracle::eval(pj, {x, y}), z}));
      r2 = oracle::plus(r2, oracle::eval(pi, {x, oracle::eval(pj, {y, z})}));
    }
    EXPECT_EQ(oracle::eval(rs[1], {x, y, z}), r2);
  }
}

TEST(Deformation, CoboundariesAreFirstOrderSolutions) {
  oracle::Rng rng(52);
  for (const auto& f : fixtures()) {
    if (f.algebra.dim() > 5 || !check_identity(f.algebra, IdentityKind::AntiAssociative).holds) continue;
    for (int trial = 0; trial < 3; ++trial) {
      const Endo g = rng.matrix(f.algebra.dim());
      const auto phi = coboundary_cochain(f.algebra, g);
      EXPECT_TRUE(deformation_residuals(f.algebra, {phi}, 1).front().is_zero()) << f.name;
      EXPECT_TRUE(first_order_deformations(f.algebra, false).contains(phi.flatten())) << f.name;
    }
  }
}

TEST(Deformation, CoboundaryMatchesFormula) {
  oracle::Rng rng(53);
  const Algebra& a = fixture("faa1").algebra;
  const Endo g = rng.matrix(3);
  const auto phi = coboundary_cochain(a, g);
  for (int trial = 0; trial < 5; ++trial) {
    const Vector x = rng.vector(3), y = rng.vector(3);
    Vector expect = g.apply(oracle::mul(a, x, y));
    expect = oracle::plus(expect, oracle::mul(a, g.apply(x), y), -1);
    expect = oracle::plus(expect, oracle::mul(a, x, g.apply(y)), -1);
    EXPECT_EQ(phi(x, y), expect);
  }
}

TEST(Deformation, HeisenbergFirstOrderSpace) {
  const Algebra& h = fixture("heisenberg3").algebra;
  std::vector<MultilinearMap> all, sym;
  for (std::size_t flat = 0; flat < 27; ++flat) all.push_back(unit_cochain(3, flat));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        MultilinearMap m(2, 3);
        m.value(std::array<std::size_t, 2>{i, j})[k] = 1;
        m.value(std::array<std::size_t, 2>{j, i})[k] = 1;
        sym.push_back(m);
      }
    }
  }
  const Subspace d1 = first_order_deformations(h, false);
  const Subspace d1_sym = first_order_deformations(h, true);
  EXPECT_EQ(d1.dim(), first_order_solution_dim(h, all));
  EXPECT_EQ(d1_sym.dim(), first_order_solution_dim(h, sym));
  EXPECT_EQ(d1.dim(), 12u);
  EXPECT_EQ(d1_sym.dim(), 9u);
  for (const auto& v : d1_sym.basis()) {
    const auto phi = MultilinearMap::unflatten(2, 3, v);
    EXPECT_TRUE(phi.is_symmetric());
    EXPECT_TRUE(deformation_residuals(h, {phi}, 1).front().is_zero());
  }
}

TEST(Deformation, ClassicalLimitOfSymmetricSolutionsIsAntiPoisson) {
  oracle::Rng rng(54);
  const Algebra& h = fixture("heisenberg3").algebra;
  const Subspace d1_sym = first_order_deformations(h, true);
  std::size_t tested = 0;
  auto try_phi = [&](const MultilinearMap& phi) {
    if (phi.is_zero() || !symmetrized_second_order_defect(phi).is_zero()) return;
    const auto t = classical_limit(h, phi);
    EXPECT_EQ(t.psi, MultilinearMap::from_algebra(h));
    EXPECT_EQ(t.rho, Rational(2) * phi);
    const auto r = check_anti_poisson(t);
    EXPECT_TRUE(r.holds) << (r.witness ? r.witness->clause : "");
    ++tested;
  };
  for (const auto& v : d1_sym.basis()) try_phi(MultilinearMap::unflatten(2, 3, v));
  for (int trial = 0; trial < 20; ++trial) {
    // sparse random combinations of the solution basis
    Vector v(27);
    for (const auto& b : d1_sym.basis()) {
      if (rng.integer(0, 2) == 0) add_scaled(v, rng.rational(), b);
    }
    try_phi(MultilinearMap::unflatten(2, 3, v));
  }
  EXPECT_GT(tested, 0u);
}

TEST(Deformation, SymmetrizedDefectIsPermutationInvariant) {
  oracle::Rng rng(55);
  const auto phi = rng.multilinear(2, 3);
  const auto d = symmetrized_second_order_defect(phi);
  EXPECT_TRUE(d.is_symmetric());
}

TEST(Deformation, ClassicalLimitGuards) {
  const Algebra& faa1 = fixture("faa1").algebra;
  EXPECT_THROW(classical_limit(faa1, MultilinearMap(2, 3)), DomainError);
  const Algebra& h = fixture("heisenberg3").algebra;
  MultilinearMap bad(2, 3);
  bad.value(std::array<std::size_t, 2>{0, 0}) = Vector{1, 0, 0};
  if (!deformation_residuals(h, {bad}, 1).front().is_zero()) {
    EXPECT_THROW(classical_limit(h, bad), DomainError);
  }
  EXPECT_THROW(classical_limit(h, MultilinearMap(2, 2)), InputError);
  EXPECT_THROW(deformation_residuals(fixture("gen2-cubic-1").algebra, {MultilinearMap(2, 5)}, 1), DomainError);
}
