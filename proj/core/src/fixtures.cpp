#include "antiassoc/fixtures.hpp"

#include <initializer_list>
#include <utility>

#include "antiassoc/errors.hpp"
#include "antiassoc/free_algebras.hpp"

namespace antiassoc {

namespace {

struct Term {
  std::size_t i, j, k;  // 1-based: e_i e_j contains coef * e_k
  Rational coef;
};

Algebra build(std::vector<std::string> names, std::initializer_list<Term> terms) {
  const std::size_t n = names.size();
  StructureTable table(n, std::vector<Vector>(n, Vector(n)));
  for (const auto& t : terms) table.at(t.i - 1).at(t.j - 1).at(t.k - 1) += t.coef;
  return Algebra(std::move(names), std::move(table));
}

Algebra build(std::size_t n, std::initializer_list<Term> terms) {
  return build(Algebra::default_names(n), terms);
}

// e_i e_j = e_j e_i = coef e_k
void sym(std::vector<Term>& out, std::size_t i, std::size_t j, std::size_t k, Rational c = 1) {
  out.push_back({i, j, k, c});
  if (i != j) out.push_back({j, i, k, c});
}

Algebra build(std::size_t n, const std::vector<Term>& terms) {
  StructureTable table(n, std::vector<Vector>(n, Vector(n)));
  for (const auto& t : terms) table.at(t.i - 1).at(t.j - 1).at(t.k - 1) += t.coef;
  return Algebra(std::move(table));
}

Algebra three_dim_c(const Rational& a, const Rational& b) {
  return build(3, {{1, 1, 2, 1}, {1, 3, 2, a}, {3, 1, 2, b}, {3, 3, 2, 1}});
}

Algebra three_dim_d(const Rational& a, const Rational& b) {
  return build(3, {{1, 1, 2, 1}, {1, 3, 2, a}, {3, 1, 2, b}});
}

// Two generators, A^(2) = span{f11, f12}: e2 e1 = a f11 + b f12, e2 e2 = c f11 + d f12.
Algebra two_gen_quadratic(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return build({"e1", "e2", "f11", "f12"},
               {{1, 1, 3, 1}, {1, 2, 4, 1}, {2, 1, 3, a}, {2, 1, 4, b}, {2, 2, 3, c}, {2, 2, 4, d}});
}

// The same with the cubic layer g112 and its printed products.
Algebra two_gen_cubic(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return build({"e1", "e2", "f11", "f12", "g112"},
               {{1, 1, 3, 1},
                {1, 2, 4, 1},
                {2, 1, 3, a},
                {2, 1, 4, b},
                {2, 2, 3, c},
                {2, 2, 4, d},
                {1, 4, 5, 1},
                {2, 3, 5, b * b},
                {2, 4, 5, a + b * d},
                {4, 1, 5, -b},
                {3, 2, 5, -1},
                {4, 2, 5, -d}});
}

// A^(2) = span{f11, f22}: e1 e2 = a f11, e2 e1 = c f11.
Algebra two_gen_split(const Rational& a, const Rational& c) {
  return build({"e1", "e2", "f11", "f22"}, {{1, 1, 3, 1}, {1, 2, 3, a}, {2, 1, 3, c}, {2, 2, 4, 1}});
}

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> out;
  auto add = [&out](std::string name, std::string source, std::string description, Algebra a) {
    out.push_back({std::move(name), std::move(source), std::move(description), std::move(a)});
  };
  const Rational one = 1, zero = 0;

  add("dim2-aa", "anti-associative examples, dimension 2",
      "e1^2=e2; the only nontrivial 2-dimensional anti-associative algebra", build(2, {{1, 1, 2, 1}}));
  add("dim3-aa-a", "anti-associative examples, dimension 3 (a)", "e1e2=-e2e1=e3",
      build(3, {{1, 2, 3, 1}, {2, 1, 3, -1}}));
  add("dim3-aa-b", "anti-associative examples, dimension 3 (b)", "e1e1=e2, e1e2=-e2e1=e3",
      build(3, {{1, 1, 2, 1}, {1, 2, 3, 1}, {2, 1, 3, -1}}));
  add("dim3-aa-c-1-1", "anti-associative examples, dimension 3 (c)",
      "e1e1=e2, e1e3=a e2, e3e1=b e2, e3e3=e2 with parameters chosen as a=b=1", three_dim_c(one, one));
  add("dim3-aa-c-0-0", "anti-associative examples, dimension 3 (c)",
      "e1e1=e2, e1e3=a e2, e3e1=b e2, e3e3=e2 with parameters chosen as a=b=0", three_dim_c(zero, zero));
  add("dim3-aa-d-1-1", "anti-associative examples, dimension 3 (d)",
      "e1e1=e2, e1e3=a e2, e3e1=b e2 with parameters chosen as a=b=1", three_dim_d(one, one));
  add("dim3-aa-d-0-0", "anti-associative examples, dimension 3 (d)",
      "e1e1=e2, e1e3=a e2, e3e1=b e2 with parameters chosen as a=b=0", three_dim_d(zero, zero));

  add("faa1", "free anti-associative algebra, 1 generator", "e1e1=e2, e1e2=-e2e1=e3",
      free_anti_associative(1).algebra);
  add("faa2", "free anti-associative algebra, 2 generators", "dimension 14",
      free_anti_associative(2).algebra);

  add("gen2-sq-all1", "two generators, one-dimensional square layer (a)",
      "e_i e_j = alpha_ij f11 with every alpha_ij chosen as 1",
      build({"e1", "e2", "f11"}, {{1, 1, 3, 1}, {1, 2, 3, 1}, {2, 1, 3, 1}, {2, 2, 3, 1}}));
  add("gen2-sq-e1only", "two generators, one-dimensional square layer (a)",
      "e_i e_j = alpha_ij f11 with alpha_11=1 and the other alpha_ij chosen as 0",
      build({"e1", "e2", "f11"}, {{1, 1, 3, 1}}));
  add("gen2-sq-b", "two generators, one-dimensional square layer (b)", "e1e2=-e2e1=f12",
      build({"e1", "e2", "f12"}, {{1, 2, 3, 1}, {2, 1, 3, -1}}));
  add("gen2-quad-1", "two generators, square layer {f11, f12} (a)",
      "e1e1=f11, e1e2=f12, e2e1=a f11+b f12, e2e2=c f11+d f12 with a=b=c=d=1",
      two_gen_quadratic(one, one, one, one));
  add("gen2-quad-0", "two generators, square layer {f11, f12} (a)",
      "e1e1=f11, e1e2=f12, e2e1=a f11+b f12, e2e2=c f11+d f12 with a=b=c=d=0",
      two_gen_quadratic(zero, zero, zero, zero));
  add("gen2-cubic-1", "two generators, square layer {f11, f12} with cubic layer g112 (b)",
      "5-dimensional table with a=b=c=d=1; not anti-associative at these parameters",
      two_gen_cubic(one, one, one, one));
  add("gen2-cubic-0", "two generators, square layer {f11, f12} with cubic layer g112 (b)",
      "5-dimensional table with a=b=c=d=0", two_gen_cubic(zero, zero, zero, zero));
  add("gen2-split-1", "two generators, square layer {f11, f22} (c)",
      "e1e1=f11, e1e2=a f11, e2e1=c f11, e2e2=f22 with a=c=1", two_gen_split(one, one));
  add("gen2-split-0", "two generators, square layer {f11, f22} (c)",
      "e1e1=f11, e1e2=a f11, e2e1=c f11, e2e2=f22 with a=c=0", two_gen_split(zero, zero));

  {
    std::vector<Term> t;
    sym(t, 1, 1, 2);
    add("comm-dim2", "commutative anti-associative examples, dimension 2", "e1e1=e2", build(2, t));
  }
  {
    std::vector<Term> t;
    sym(t, 1, 2, 3);
    add("comm-dim3", "commutative anti-associative examples, dimension 3", "e1e2=e2e1=e3", build(3, t));
  }
  {
    std::vector<Term> t;
    sym(t, 1, 1, 2);
    sym(t, 1, 3, 4);
    add("comm-dim4-a", "commutative anti-associative examples, dimension 4 (a)",
        "e1e1=e2, e1e3=e3e1=e4", build(4, t));
  }
  {
    std::vector<Term> t;
    sym(t, 1, 1, 2);
    sym(t, 3, 3, 4);
    add("comm-dim4-b", "commutative anti-associative examples, dimension 4 (b)", "e1e1=e2, e3e3=e4",
        build(4, t));
  }
  {
    std::vector<Term> t;
    sym(t, 1, 1, 4);
    sym(t, 2, 3, 4);
    add("comm-dim4-c", "commutative anti-associative examples, dimension 4 (c)",
        "e1e1=e4, e2e3=e3e2=e4", build(4, t));
  }

  add("heisenberg3", "anticommutative anti-associative examples, dimension 3",
      "e1e2=-e2e1=e3 (3-dimensional Heisenberg algebra)", build(3, {{1, 2, 3, 1}, {2, 1, 3, -1}}));
  add("anticomm-dim4", "anticommutative anti-associative examples, dimension 4",
      "e1e2=-e2e1=e3, e4 central", build(4, {{1, 2, 3, 1}, {2, 1, 3, -1}}));
  add("anticomm-dim5", "anticommutative anti-associative examples, dimension 5",
      "e1e2=-e2e1=e3, e1e4=-e4e1=e5",
      build(5, {{1, 2, 3, 1}, {2, 1, 3, -1}, {1, 4, 5, 1}, {4, 1, 5, -1}}));
  add("free-anticomm3", "free anticommutative anti-associative algebra, 3 generators",
      "e1e23=-e2e13=e3e12=e123; not a Lie algebra", free_anticommutative_aa(3).algebra);

  {
    std::vector<Term> t;
    sym(t, 1, 1, 2);
    add("jj-dim2", "Jacobi-Jordan examples, dimension 2", "e1e1=e2", build(2, t));
  }
  {
    std::vector<Term> t;
    sym(t, 1, 1, 2);
    sym(t, 3, 3, 2);
    add("jj-dim3", "Jacobi-Jordan examples, dimension 3", "e1e1=e2, e3e3=e2", build(3, t));
  }
  {
    std::vector<Term> t;
    sym(t, 1, 1, 2);
    sym(t, 1, 3, 4);
    add("jj-dim4-a", "Jacobi-Jordan examples, dimension 4 (a)", "e1e1=e2, e1e3=e3e1=e4", build(4, t));
  }
  {
    std::vector<Term> t;
    sym(t, 1, 1, 2);
    sym(t, 3, 4, 2);
    add("jj-dim4-b", "Jacobi-Jordan examples, dimension 4 (b)", "e1e1=e2, e3e4=e4e3=e2", build(4, t));
  }
  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = make_fixtures();
  return all;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw InputError("unknown fixture \"" + name + "\"");
}

}  // namespace antiassoc
