#include "antiassoc/free_algebras.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <string>

#include "antiassoc/errors.hpp"

namespace antiassoc {

namespace {

std::string index_name(char prefix, std::initializer_list<std::size_t> idx, std::size_t k) {
  std::string out(1, prefix);
  bool first = true;
  for (auto i : idx) {
    if (!first && k > 9) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out;
}

StructureTable empty_table(std::size_t n) {
  return StructureTable(n, std::vector<Vector>(n, Vector(n)));
}

std::vector<Subspace> coordinate_grading(std::size_t n, const std::vector<std::size_t>& sizes) {
  std::vector<Subspace> grading;
  std::size_t start = 0;
  for (auto s : sizes) {
    std::vector<Vector> basis;
    for (std::size_t i = start; i < start + s; ++i) basis.push_back(unit_vector(n, i));
    grading.push_back(Subspace::span(n, basis));
    start += s;
  }
  return grading;
}

void require_positive(std::size_t v, const char* what) {
  if (v == 0) throw InputError(std::string(what) + " must be at least 1");
}

void require_size(std::size_t generators, std::size_t dim) {
  if (generators > kMaxFreeAlgebraDim || dim > kMaxFreeAlgebraDim) {
    throw InputError("free algebra on " + std::to_string(generators) + " generators exceeds dimension " +
                     std::to_string(kMaxFreeAlgebraDim));
  }
}

}  // namespace

GradedAlgebra free_anti_associative(std::size_t k) {
  require_positive(k, "number of generators");
  require_size(k, k > kMaxFreeAlgebraDim ? k : k + k * k + k * k * k);
  const std::size_t n = k + k * k + k * k * k;
  auto e = [](std::size_t i) { return i; };
  auto f = [k](std::size_t i, std::size_t j) { return k + i * k + j; };
  auto g = [k](std::size_t i, std::size_t j, std::size_t l) { return k + k * k + (i * k + j) * k + l; };

  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < k; ++i) {
    names[e(i)] = index_name('e', {i}, k);
    for (std::size_t j = 0; j < k; ++j) {
      names[f(i, j)] = index_name('f', {i, j}, k);
      for (std::size_t l = 0; l < k; ++l) names[g(i, j, l)] = index_name('g', {i, j, l}, k);
    }
  }
  auto table = empty_table(n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table[e(i)][e(j)][f(i, j)] = 1;
      for (std::size_t l = 0; l < k; ++l) {
        table[e(i)][f(j, l)][g(i, j, l)] = 1;
        table[f(i, j)][e(l)][g(i, j, l)] = -1;
      }
    }
  }
  return {Algebra(std::move(names), std::move(table)), coordinate_grading(n, {k, k * k, k * k * k})};
}

GradedAlgebra free_commutative_aa(std::size_t p) {
  require_positive(p, "number of generators");
  require_size(p, p > kMaxFreeAlgebraDim ? p : p + p * (p + 1) / 2);
  const std::size_t n = p + p * (p + 1) / 2;
  std::vector<std::string> names;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
  for (std::size_t i = 0; i < p; ++i) names.push_back(index_name('e', {i}, p));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      pair_index[{i, j}] = names.size();
      names.push_back(index_name('e', {i, j}, p));
    }
  }
  auto table = empty_table(n);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      table[i][j][pair_index.at({std::min(i, j), std::max(i, j)})] = 1;
    }
  }
  return {Algebra(std::move(names), std::move(table)), coordinate_grading(n, {p, n - p})};
}

GradedAlgebra free_anticommutative_aa(std::size_t p) {
  require_positive(p, "number of generators");
  require_size(p, p > kMaxFreeAlgebraDim ? p : p + p * (p - 1) / 2 + p * (p - 1) * (p - 2) / 6);
  std::vector<std::string> names;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> triple_index;
  for (std::size_t i = 0; i < p; ++i) names.push_back(index_name('e', {i}, p));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      pair_index[{i, j}] = names.size();
      names.push_back(index_name('e', {i, j}, p));
    }
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      for (std::size_t l = j + 1; l < p; ++l) {
        triple_index[{i, j, l}] = names.size();
        names.push_back(index_name('e', {i, j, l}, p));
      }
    }
  }
  const std::size_t n = names.size();
  auto table = empty_table(n);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      const auto ij = pair_index.at({i, j});
      table[i][j][ij] = 1;
      table[j][i][ij] = -1;
    }
  }
  // e_a e_bc for b < c. Anti-associativity with anticommutativity gives
  // a(bc) = b(ca) = c(ab), so the word is rotated until its least letter is
  // outermost, then the inner pair is sorted at the cost of a sign. The
  // basis element e_ijk is i(jk) with i < j < k.
  for (std::size_t a = 0; a < p; ++a) {
    for (const auto& [bc, index] : pair_index) {
      auto [b, c] = bc;
      if (a == b || a == c) continue;
      std::size_t outer = a, x = b, y = c;
      while (outer > x || outer > y) {
        const std::size_t next_outer = x;
        x = y;
        y = outer;
        outer = next_outer;
      }
      int sign = 1;
      if (x > y) {
        std::swap(x, y);
        sign = -1;
      }
      const auto target = triple_index.at({outer, x, y});
      table[a][index][target] = sign;
      table[index][a][target] = -sign;
    }
  }
  const std::size_t pairs = pair_index.size();
  return {Algebra(std::move(names), std::move(table)),
          coordinate_grading(n, {p, pairs, triple_index.size()})};
}

TreePolynomial jacobi_jordan_relation() {
  return {{tree::parse("x1(x2x3)"), 1}, {tree::parse("x2(x3x1)"), 1}, {tree::parse("x3(x1x2)"), 1}};
}

TreePolynomial anti_associative_relation() {
  return {{tree::parse("x1(x2x3)"), 1}, {tree::parse("(x1x2)x3"), 1}};
}

namespace {

void check_jordan_args(std::size_t p, std::size_t d) {
  require_positive(p, "number of generators");
  require_positive(d, "degree");
  if (d > kMaxFreeJordanDegree) {
    throw InputError("degree " + std::to_string(d) + " exceeds the supported maximum " +
                     std::to_string(kMaxFreeJordanDegree));
  }
  if (p > 26) throw InputError("at most 26 generators are supported");
}

}  // namespace

std::vector<JordanComponentPart> free_jacobi_jordan_component(std::size_t p, std::size_t d) {
  check_jordan_args(p, d);
  MonomialEngine engine(GeneratorSymmetry::Commutative, {jacobi_jordan_relation()});
  std::vector<JordanComponentPart> parts;
  for (const auto& alpha : multidegrees(p, d)) {
    JordanComponentPart part;
    part.multidegree = alpha;
    for (const auto& code : engine.quotient_basis(alpha)) part.basis.push_back(tree::format(code));
    part.dim = part.basis.size();
    parts.push_back(std::move(part));
  }
  return parts;
}

std::size_t free_jacobi_jordan_component_dim(std::size_t p, std::size_t d) {
  std::size_t dim = 0;
  for (const auto& part : free_jacobi_jordan_component(p, d)) dim += part.dim;
  return dim;
}

}  // namespace antiassoc
