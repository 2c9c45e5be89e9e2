#pragma once

#include <cstddef>
#include <vector>

#include "antiassoc/algebra.hpp"
#include "antiassoc/monomials.hpp"
#include "antiassoc/subspace.hpp"

namespace antiassoc {

/// An algebra with a direct-sum decomposition into degree components;
/// grading[d-1] is the degree-d component.
struct GradedAlgebra {
  Algebra algebra;
  std::vector<Subspace> grading;
};

/// The three constructions below store dense tables and throw InputError
/// when the result would exceed this dimension.
inline constexpr std::size_t kMaxFreeAlgebraDim = 160;

/// Free anti-associative algebra on k generators: basis e_i, f_ij = e_i e_j,
/// g_ijl = e_i f_jl, with f_ij e_l = -g_ijl and all products of degree 4 zero.
GradedAlgebra free_anti_associative(std::size_t k);

/// Free commutative anti-associative algebra on p generators: e_i, e_ij (i <= j),
/// e_i e_j = e_ij and every triple product zero.
GradedAlgebra free_commutative_aa(std::size_t p);

/// Free anticommutative anti-associative algebra on p generators:
/// e_i, e_ij (i < j), e_ijk (i < j < k).
GradedAlgebra free_anticommutative_aa(std::size_t p);

/// Relation x1(x2x3) + x2(x3x1) + x3(x1x2) on a commutative generator.
TreePolynomial jacobi_jordan_relation();
/// Relation x1(x2x3) + (x1x2)x3.
TreePolynomial anti_associative_relation();

inline constexpr std::size_t kMaxFreeJordanDegree = 6;

/// Dimension of the total-degree-d component of the free Jacobi-Jordan
/// algebra on p generators. Throws InputError for p = 0, d = 0 or d > 6.
std::size_t free_jacobi_jordan_component_dim(std::size_t p, std::size_t d);

/// Per-multidegree breakdown of the same component, with quotient bases.
struct JordanComponentPart {
  Multidegree multidegree;
  std::size_t dim = 0;
  std::vector<std::string> basis;  // words in X, Y, ... (1-based "x" labels)
};
std::vector<JordanComponentPart> free_jacobi_jordan_component(std::size_t p, std::size_t d);

}  // namespace antiassoc
