#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "antiassoc/algebra.hpp"
#include "antiassoc/matrix.hpp"
#include "antiassoc/subspace.hpp"

namespace antiassoc {

/// Endomorphism of an algebra as a square matrix; column j is the image of e_j.
using Endo = Matrix;

Endo left_mult(const Algebra& a, std::span<const Rational> x);   // y -> xy
Endo right_mult(const Algebra& a, std::span<const Rational> x);  // y -> yx
/// L_x + R_x
Endo inner_anti_derivation(const Algebra& a, std::span<const Rational> x);

/// f g + g f
Endo symmetric_product(const Endo& f, const Endo& g);
/// f g - g f
Endo commutator(const Endo& f, const Endo& g);

/// Row-major flattening of an n x n endomorphism into Q^(n*n), the ambient
/// space of the operator subspaces below.
Vector flatten(const Endo& f);
Endo unflatten(std::span<const Rational> v, std::size_t n);
std::vector<Endo> endo_basis(const Subspace& s, std::size_t n);

/// Linear maps with f(xy) = x f(y) + f(x) y.
Subspace derivation_space(const Algebra& a);
/// Linear maps with f(xy) + x f(y) + f(x) y = 0.
Subspace anti_derivation_space(const Algebra& a);
/// Maps that are both: f(xy) = 0 and x f(y) + f(x) y = 0.
Subspace derivation_anti_derivation_intersection(const Algebra& a);

/// Span of L_{e_i} + R_{e_i}. Throws DomainError unless a is anti-associative.
Subspace inner_anti_derivations(const Algebra& a);

struct OperatorAlgebraReport {
  std::size_t dim = 0;
  /// Associative closure: least k with every k-fold product zero.
  /// Lie closure: length of the lower central series until it vanishes.
  /// nullopt when the sequence stabilizes at a nonzero space.
  std::optional<std::size_t> nilindex;
  bool two_step_nilpotent = false;  // [[g,g],g] = 0 (Lie closure only)
  std::size_t derived_dim = 0;      // dim [g,g] (Lie), dim M^2 (associative)
  Subspace span;                    // flattened closure
};

/// Associative subalgebra of End(A) generated by all L_{e_i}, R_{e_i}.
OperatorAlgebraReport multiplication_algebra(const Algebra& a);
/// Lie subalgebra of gl(A) generated by all L_{e_i}, R_{e_i}.
OperatorAlgebraReport lie_multiplication_algebra(const Algebra& a);

}  // namespace antiassoc
