#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "antiassoc/matrix.hpp"
#include "antiassoc/rational.hpp"

namespace antiassoc {

/// A subspace of Q^n stored by the nonzero rows of its reduced row-echelon
/// basis. The representation is canonical: equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of Q^ambient.
  explicit Subspace(std::size_t ambient);

  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, std::span<const Vector> vectors);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }

  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after eliminating the pivot coordinates; zero iff v is
  /// in the subspace. The remainder is a canonical coset representative.
  Vector reduce(std::span<const Rational> v) const;

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  /// Basis rows stacked into a dim x ambient matrix.
  Matrix as_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}, dimension cols - rank.
Subspace kernel_basis(const Matrix& m);

/// Column space of m, as a subspace of Q^rows.
Subspace image(const Matrix& m);

/// {w : <w, v> = 0 for all v in s} under the standard bilinear form.
Subspace annihilator(const Subspace& s);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);


}  // namespace antiassoc
