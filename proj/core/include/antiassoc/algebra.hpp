#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "antiassoc/rational.hpp"
#include "antiassoc/subspace.hpp"

namespace antiassoc {

/// Structure-constant table: table[i][j][k] is the coefficient of e_k in e_i e_j.
using StructureTable = std::vector<std::vector<Vector>>;

/// A finite-dimensional algebra over Q given by structure constants.
class Algebra {
 public:
  Algebra() = default;
  /// Throws InputError on inconsistent shapes or repeated basis names.
  Algebra(std::vector<std::string> basis_names, StructureTable table);
  /// Basis named e1..en.
  explicit Algebra(StructureTable table);

  static Algebra zero(std::size_t n);
  static std::vector<std::string> default_names(std::size_t n);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const StructureTable& table() const { return table_; }

  /// e_i e_j
  const Vector& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

  /// Bilinear extension of the table; throws InputError on length mismatch.
  Vector multiply(std::span<const Rational> x, std::span<const Rational> y) const;

  /// Index pairs (i, j) with e_i e_j != 0.
  const std::vector<std::pair<std::size_t, std::size_t>>& nonzero_products() const {
    return nonzero_;
  }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

 private:
  void validate();

  std::vector<std::string> names_;
  StructureTable table_;
  std::vector<std::pair<std::size_t, std::size_t>> nonzero_;
};

/// x(yz) + (xy)z
Vector anti_associator(const Algebra& a, std::span<const Rational> x,
                       std::span<const Rational> y, std::span<const Rational> z);

/// (xy)z - x(yz)
Vector associator(const Algebra& a, std::span<const Rational> x, std::span<const Rational> y,
                  std::span<const Rational> z);

/// Span of all products u_i v_j over bases of u and v.
Subspace product_subspace(const Algebra& a, const Subspace& u, const Subspace& v);

/// A^1 = A, A^k = sum over i+j=k of A^i A^j, listed from A^1 until the
/// first zero term or until the chain stabilizes.
std::vector<Subspace> power_subspaces(const Algebra& a);

/// Least k with A^k = 0; nullopt when the chain stabilizes at a nonzero space.
std::optional<std::size_t> nilindex(const Algebra& a);

}  // namespace antiassoc
