#include <gtest/gtest.h>

#include <filesystem>

#include "antiassoc/algebra_io.hpp"
#include "antiassoc/errors.hpp"
#include "antiassoc/fixtures.hpp"
#include "antiassoc/matrix.hpp"
#include "antiassoc/sparse.hpp"
#include "antiassoc/subspace.hpp"
#include "oracles.hpp"

using namespace antiassoc;

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(format_rational(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(format_rational(parse_rational("0/7")), "0");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational("1.5"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Rational, FirstNonzero) {
  Vector v{0, 0, Rational(1, 2), 3};
  EXPECT_EQ(first_nonzero(v), 2u);
  EXPECT_EQ(first_nonzero(zero_vector(4)), 4u);
  EXPECT_TRUE(is_zero(zero_vector(3)));
}

TEST(Matrix, RankMatchesBareissOnRandomMatrices) {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = rng.integer(1, 6), cols = rng.integer(1, 6);
    Matrix m(rows, cols);
    oracle::Rows copy(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        // sparse entries so that rank deficiency actually shows up
        m(r, c) = rng.integer(0, 2) == 0 ? rng.rational() : Rational(0);
        copy[r][c] = m(r, c);
      }
    }
    EXPECT_EQ(rank(m), oracle::rank(copy)) << "trial " << trial;
  }
}

TEST(Matrix, RrefIsReducedAndIdempotent) {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = rng.matrix(4);
    m.row(3)[0] = 0;
    const auto r = rref(m);
    for (std::size_t i = 0; i < r.rank; ++i) {
      EXPECT_EQ(r.reduced(i, r.pivots[i]), 1);
      for (std::size_t k = 0; k < r.reduced.rows(); ++k) {
        if (k != i) {
          EXPECT_EQ(r.reduced(k, r.pivots[i]), 0);
        }
      }
    }
    EXPECT_EQ(rref(r.reduced).reduced, r.reduced);
  }
}

TEST(Matrix, ProductAndTranspose) {
  oracle::Rng rng(13);
  const Matrix a = rng.matrix(3), b = rng.matrix(3);
  EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
  EXPECT_EQ(a * Matrix::identity(3), a);
  const Vector v = rng.vector(3);
  EXPECT_EQ((a * b).apply(v), a.apply(b.apply(v)));
  EXPECT_THROW(a.apply(Vector(2)), InputError);
}

TEST(Subspace, KernelDimensionAndMembership) {
  oracle::Rng rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = rng.integer(1, 5), cols = rng.integer(1, 6);
    Matrix m(rows, cols);
    oracle::Rows copy(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = rng.integer(0, 1) == 0 ? rng.rational() : Rational(0);
        copy[r][c] = m(r, c);
      }
    }
    const Subspace k = kernel_basis(m);
    EXPECT_EQ(k.dim(), cols - oracle::rank(copy));
    for (const auto& v : k.basis()) EXPECT_TRUE(is_zero(m.apply(v)));
    EXPECT_EQ(image(m).dim(), oracle::rank(copy));
  }
}

TEST(Subspace, CanonicalUnderChoiceOfSpanningSet) {
  oracle::Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const Vector u = rng.vector(5), v = rng.vector(5);
    Vector w = u;
    add_scaled(w, rng.rational(), v);
    const std::vector<Vector> first{u, v}, second{w, v, u};
    EXPECT_EQ(Subspace::span(5, first), Subspace::span(5, second));
  }
}

TEST(Subspace, SumIntersectionAnnihilator) {
  oracle::Rng rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vector> av{rng.vector(5), rng.vector(5)}, bv{rng.vector(5), rng.vector(5)};
    bv.push_back(av[0]);
    const Subspace a = Subspace::span(5, av), b = Subspace::span(5, bv);
    const Subspace s = subspace_sum(a, b), i = subspace_intersection(a, b);
    EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
    EXPECT_TRUE(s.contains(a));
    EXPECT_TRUE(b.contains(i));
    EXPECT_TRUE(i.contains(av[0]));
    const Subspace ann = annihilator(a);
    EXPECT_EQ(ann.dim(), 5 - a.dim());
    for (const auto& x : ann.basis()) {
      for (const auto& y : a.basis()) {
        Rational dot = 0;
        for (std::size_t c = 0; c < 5; ++c) dot += x[c] * y[c];
        EXPECT_EQ(dot, 0);
      }
    }
  }
}

TEST(SparseEchelon, AgreesWithDenseKernel) {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m(4, 6);
    SparseEchelon e(6);
    for (std::size_t r = 0; r < 4; ++r) {
      SparseRow row;
      for (std::size_t c = 0; c < 6; ++c) {
        if (rng.integer(0, 2) == 0) {
          m(r, c) = rng.rational();
          if (m(r, c) != 0) row[c] = m(r, c);
        }
      }
      e.insert(row);
    }
    EXPECT_EQ(e.rank(), rank(m));
    EXPECT_EQ(e.kernel(), kernel_basis(m));
    EXPECT_EQ(e.row_space(), Subspace::row_space(m));
  }
}

TEST(AlgebraIo, RoundTripIsByteStable) {
  for (const auto& f : fixtures()) {
    const std::string text = write_algebra(f.algebra);
    EXPECT_EQ(read_algebra(text), f.algebra) << f.name;
    EXPECT_EQ(write_algebra(read_algebra(text)), text) << f.name;
  }
}

TEST(AlgebraIo, RejectsMalformedInput) {
  EXPECT_THROW(read_algebra("not json"), InputError);
  EXPECT_THROW(read_algebra(R"({"basis":["a"],"dim":2,"table":[]})"), InputError);
  EXPECT_THROW(read_algebra(R"({"basis":["a","a"],"dim":2,"table":[[["0","0"],["0","0"]],[["0","0"],["0","0"]]]})"),
               InputError);
  EXPECT_THROW(read_algebra(R"({"basis":["a"],"dim":1,"table":[[["x"]]]})"), InputError);
  EXPECT_THROW(load_algebra("/nonexistent/file.alg"), InputError);
}

TEST(AlgebraIo, ShippedFixtureFilesMatchCatalog) {
  const std::filesystem::path dir = ANTIASSOC_FIXTURE_DIR;
  for (const auto& f : fixtures()) {
    const auto path = dir / (f.name + ".alg");
    ASSERT_TRUE(std::filesystem::exists(path)) << path;
    EXPECT_EQ(read_text_file(path), write_algebra(f.algebra)) << f.name;
  }
}

TEST(Fixtures, LookupByName) {
  EXPECT_EQ(fixture("faa1").algebra.dim(), 3u);
  EXPECT_THROW(fixture("no-such-fixture"), InputError);
}

TEST(Algebra, MultiplyMatchesTableExpansion) {
  oracle::Rng rng(18);
  const Algebra& a = fixture("faa2").algebra;
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x = rng.vector(a.dim()), y = rng.vector(a.dim());
    EXPECT_EQ(a.multiply(x, y), oracle::mul(a, x, y));
  }
  EXPECT_THROW(a.multiply(Vector(2), Vector(2)), InputError);
}

TEST(Algebra, RejectsInconsistentTables) {
  StructureTable bad(2, std::vector<Vector>(2, Vector(3)));
  EXPECT_THROW(Algebra{bad}, InputError);
  StructureTable ok(1, std::vector<Vector>(1, Vector(1)));
  EXPECT_THROW(Algebra({"a", "b"}, ok), InputError);
}
