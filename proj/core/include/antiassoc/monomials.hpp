#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "antiassoc/rational.hpp"
#include "antiassoc/sparse.hpp"

namespace antiassoc {

/// Symmetry of the single binary generation operation.
enum class GeneratorSymmetry { None, Commutative, AntiCommutative };

std::string_view symmetry_name(GeneratorSymmetry s);
GeneratorSymmetry parse_symmetry(std::string_view name);

/// Binary-tree monomials are stored as prefix codes: '*' for an internal
/// node followed by its two children, and a single character 'a' + label for
/// a leaf. Labels are limited to 0..25.
namespace tree {

std::string leaf(unsigned label);
std::string node(std::string_view left, std::string_view right);

bool is_leaf(std::string_view code);
/// Splits an internal node into its two child codes.
std::pair<std::string_view, std::string_view> children(std::string_view code);

std::size_t leaf_count(std::string_view code);
unsigned min_label(std::string_view code);
/// Number of occurrences of each label, indexed by label.
std::vector<unsigned> label_counts(std::string_view code, std::size_t labels);

/// Canonical representative under the symmetry and its sign (+1, -1, or 0
/// when an anticommutative node has two equal children). Children of
/// symmetric nodes are ordered by least leaf label, then by code.
std::pair<std::string, int> canonical(std::string_view code, GeneratorSymmetry symmetry);

/// Replaces leaf label i by substitutions[i].
std::string substitute(std::string_view code, const std::vector<std::string>& substitutions);

/// Renders a tree as "x1(x2x3)" using 1-based labels and the given letter.
/// Leaves of a larger product are parenthesized only when they are products.
std::string format(std::string_view code, char letter = 'x');

/// Parses words such as "x1(x2x3)", "(x1x2)x3", "(x1x2)(x3x4)" or "x1".
/// Labels are 1-based in the text. Throws InputError.
std::string parse(std::string_view text);

}  // namespace tree

/// Formal linear combination of tree codes.
using TreePolynomial = std::map<std::string, Rational>;

/// Canonicalizes every term and merges coefficients; zero terms are dropped.
TreePolynomial canonical(const TreePolynomial& p, GeneratorSymmetry symmetry);

/// Text form: "x1(x2x3) + (x1x2)x3", "x1(x2x3) - 1/2 x3(x1x2)".
std::string format(const TreePolynomial& p);

/// Inverse of format (coefficients optional, "2 x1(x2x3)" or "-1/2 x1x2").
/// Throws InputError.
TreePolynomial parse_polynomial(std::string_view text);

/// Multidegree: number of occurrences of each generator label.
using Multidegree = std::vector<std::uint8_t>;

/// Quotients of the free (commutative / anticommutative / plain) magma
/// algebra by the two-sided ideal generated by all substitution instances of
/// multilinear relations, one multihomogeneous component at a time.
///
/// The ideal component at degree alpha is spanned by
///   - every relation with its variables replaced by monomials whose
///     multidegrees add up to alpha, and
///   - every product r m (and m r without symmetry) where r runs over a
///     basis of a lower ideal component and m over monomials.
/// Lower components are computed recursively and memoized.
class MonomialEngine {
 public:
  /// Each relation must be multilinear in its variables 0..k-1.
  MonomialEngine(GeneratorSymmetry symmetry, std::vector<TreePolynomial> relations);

  GeneratorSymmetry symmetry() const { return symmetry_; }

  /// Canonical monomials of the given multidegree (nonzero ones only).
  const std::vector<std::string>& monomials(const Multidegree& alpha);

  std::size_t ideal_dim(const Multidegree& alpha);
  std::size_t quotient_dim(const Multidegree& alpha);

  /// Monomials whose classes form a basis of the quotient component.
  std::vector<std::string> quotient_basis(const Multidegree& alpha);

 private:
  struct Component {
    std::vector<std::string> monomials;
    std::unordered_map<std::string, std::size_t> index;
    bool ideal_done = false;
    SparseEchelon ideal{0};
  };

  Component& component(const Multidegree& alpha);
  Component& ideal(const Multidegree& alpha);
  SparseRow to_row(const Component& c, const TreePolynomial& p) const;

  GeneratorSymmetry symmetry_;
  std::vector<TreePolynomial> relations_;
  std::vector<std::size_t> relation_arity_;
  std::map<Multidegree, Component> components_;
};

/// All multidegrees of total degree d over p labels, in lexicographic order.
std::vector<Multidegree> multidegrees(std::size_t p, std::size_t d);

/// Proper splittings alpha = beta + gamma with beta, gamma nonzero, beta first
/// in lexicographic order of beta.
std::vector<std::pair<Multidegree, Multidegree>> splittings(const Multidegree& alpha);

}  // namespace antiassoc
