#include "antiassoc/algebra.hpp"

#include <algorithm>
#include <set>

#include "antiassoc/errors.hpp"

namespace antiassoc {

namespace {

void require_length(std::span<const Rational> v, std::size_t n) {
  if (v.size() != n) {
    throw InputError("vector of length " + std::to_string(v.size()) +
                     " given for an algebra of dimension " + std::to_string(n));
  }
}

}  // namespace

Algebra::Algebra(std::vector<std::string> basis_names, StructureTable table)
    : names_(std::move(basis_names)), table_(std::move(table)) {
  validate();
}

Algebra::Algebra(StructureTable table)
    : names_(default_names(table.size())), table_(std::move(table)) {
  validate();
}

void Algebra::validate() {
  const std::size_t n = names_.size();
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n) {
    throw InputError("basis names must be pairwise distinct");
  }
  if (table_.size() != n) throw InputError("structure table has wrong number of rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n) throw InputError("structure table row has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i][j].size() != n) throw InputError("structure constant vector has wrong length");
      if (!is_zero(table_[i][j])) nonzero_.emplace_back(i, j);
    }
  }
}

Algebra Algebra::zero(std::size_t n) {
  return Algebra(StructureTable(n, std::vector<Vector>(n, Vector(n))));
}

std::vector<std::string> Algebra::default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

Vector Algebra::multiply(std::span<const Rational> x, std::span<const Rational> y) const {
  const std::size_t n = dim();
  require_length(x, n);
  require_length(y, n);
  Vector out(n);
  Rational c;
  for (const auto& [i, j] : nonzero_) {
    if (sgn(x[i]) == 0 || sgn(y[j]) == 0) continue;
    c = x[i] * y[j];
    add_scaled(out, c, table_[i][j]);
  }
  return out;
}

Vector anti_associator(const Algebra& a, std::span<const Rational> x,
                       std::span<const Rational> y, std::span<const Rational> z) {
  Vector out = a.multiply(x, a.multiply(y, z));
  add_scaled(out, 1, a.multiply(a.multiply(x, y), z));
  return out;
}

Vector associator(const Algebra& a, std::span<const Rational> x, std::span<const Rational> y,
                  std::span<const Rational> z) {
  Vector out = a.multiply(a.multiply(x, y), z);
  add_scaled(out, -1, a.multiply(x, a.multiply(y, z)));
  return out;
}

Subspace product_subspace(const Algebra& a, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != a.dim() || v.ambient_dim() != a.dim()) {
    throw InputError("subspace does not live in the algebra");
  }
  std::vector<Vector> products;
  for (const auto& x : u.basis()) {
    for (const auto& y : v.basis()) {
      auto p = a.multiply(x, y);
      if (!is_zero(p)) products.push_back(std::move(p));
    }
  }
  return Subspace::span(a.dim(), products);
}

std::vector<Subspace> power_subspaces(const Algebra& a) {
  std::vector<Subspace> powers{Subspace::full(a.dim())};
  while (!powers.back().is_zero()) {
    const std::size_t k = powers.size() + 1;
    Subspace next(a.dim());
    for (std::size_t i = 1; i < k; ++i) {
      next = subspace_sum(next, product_subspace(a, powers[i - 1], powers[k - i - 1]));
    }
    const bool stable = next == powers.back();
    powers.push_back(std::move(next));
    if (stable) break;
  }
  return powers;
}

std::optional<std::size_t> nilindex(const Algebra& a) {
  const auto powers = power_subspaces(a);
  if (!powers.back().is_zero()) return std::nullopt;
  // powers[k-1] is A^k.
  return std::max<std::size_t>(powers.size(), 2);
}

}  // namespace antiassoc
