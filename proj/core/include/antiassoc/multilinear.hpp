#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "antiassoc/algebra.hpp"
#include "antiassoc/rational.hpp"

namespace antiassoc {

/// An n-linear map A^n -> A stored by its values on basis tuples. The value
/// on (e_{i1}, ..., e_{in}) sits at flat index ((i1 d + i2) d + ...) d + in.
class MultilinearMap {
 public:
  MultilinearMap() = default;
  /// The zero map.
  MultilinearMap(std::size_t arity, std::size_t dim);
  /// values.size() must be dim^arity, each of length dim.
  MultilinearMap(std::size_t arity, std::size_t dim, std::vector<Vector> values);

  /// The multiplication of an algebra as a bilinear map.
  static MultilinearMap from_algebra(const Algebra& a);
  /// Bilinear map as an algebra with default basis names.
  Algebra to_algebra() const;

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return values_.size(); }

  std::size_t flat_index(std::span<const std::size_t> indices) const;
  std::vector<std::size_t> indices(std::size_t flat) const;

  const Vector& at(std::size_t flat) const { return values_[flat]; }
  Vector& at(std::size_t flat) { return values_[flat]; }
  const Vector& value(std::span<const std::size_t> indices) const { return values_[flat_index(indices)]; }
  Vector& value(std::span<const std::size_t> indices) { return values_[flat_index(indices)]; }

  /// Multilinear extension; throws InputError on wrong argument count or length.
  Vector apply(const std::vector<Vector>& args) const;
  /// Bilinear shortcut.
  Vector operator()(std::span<const Rational> x, std::span<const Rational> y) const;

  bool is_zero() const;
  /// Invariant (resp. sign-alternating) under every transposition of arguments.
  bool is_symmetric() const;
  bool is_antisymmetric() const;

  /// Arguments permuted: result(x_1..x_n) = this(x_{perm[0]}, ..., x_{perm[n-1]}).
  MultilinearMap permuted(std::span<const std::size_t> perm) const;

  MultilinearMap& operator+=(const MultilinearMap& other);
  MultilinearMap& operator-=(const MultilinearMap& other);
  MultilinearMap& operator*=(const Rational& scale);
  friend MultilinearMap operator+(MultilinearMap a, const MultilinearMap& b) { return a += b; }
  friend MultilinearMap operator-(MultilinearMap a, const MultilinearMap& b) { return a -= b; }
  friend MultilinearMap operator*(const Rational& s, MultilinearMap a) { return a *= s; }
  friend bool operator==(const MultilinearMap& a, const MultilinearMap& b) = default;

  /// All coefficients concatenated in flat order (dim^(arity+1) entries).
  Vector flatten() const;
  static MultilinearMap unflatten(std::size_t arity, std::size_t dim, std::span<const Rational> v);

 private:
  std::size_t arity_ = 0;
  std::size_t dim_ = 0;
  std::vector<Vector> values_;
};

/// {"arity": n, "dim": d, "coeffs": nested arrays of "p/q"} with coeffs
/// indexed [i1]...[in][k].
nlohmann::json multilinear_to_json(const MultilinearMap& m);
MultilinearMap multilinear_from_json(const nlohmann::json& j);
MultilinearMap load_multilinear(const std::string& path);

/// Builds the map from a callback evaluated on every basis tuple.
template <typename F>
MultilinearMap tabulate(std::size_t arity, std::size_t dim, F&& f) {
  MultilinearMap m(arity, dim);
  for (std::size_t flat = 0; flat < m.size(); ++flat) m.at(flat) = f(m.indices(flat));
  return m;
}

}  // namespace antiassoc
