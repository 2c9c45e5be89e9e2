#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "antiassoc/algebra.hpp"

namespace antiassoc {

enum class IdentityKind {
  AntiAssociative,
  Associative,
  Commutative,
  AntiCommutative,
  JacobiJordan,
  WeaklyAssociative,
  WeaklyAntiAssociative,
  JJAdmissible,
  Lie,
};

inline constexpr IdentityKind kAllIdentityKinds[] = {
    IdentityKind::AntiAssociative,     IdentityKind::Associative,
    IdentityKind::Commutative,         IdentityKind::AntiCommutative,
    IdentityKind::JacobiJordan,        IdentityKind::WeaklyAssociative,
    IdentityKind::WeaklyAntiAssociative, IdentityKind::JJAdmissible,
    IdentityKind::Lie,
};

/// Kebab-case names used by the CLI: "anti-associative", "jacobi-jordan", ...
std::string_view identity_name(IdentityKind kind);
/// Throws InputError on unknown names.
IdentityKind parse_identity_kind(std::string_view name);

struct IdentityWitness {
  std::vector<std::size_t> indices;  // basis indices of the failing tuple
  Vector defect;                     // nonzero
  std::string clause;                // which defining polynomial failed
};

struct IdentityReport {
  bool holds = true;
  std::optional<IdentityWitness> witness;
};

/// Evaluates the identity on every basis tuple. Kinds with two defining
/// polynomials (Jacobi-Jordan: commutativity and the Jacobi sum; Lie:
/// anticommutativity and the Jacobi sum) check the binary clause first.
/// The witness is the lexicographically first failing tuple.
IdentityReport check_identity(const Algebra& a, IdentityKind kind);

/// Value of the identity's (last) defining polynomial at the given vectors.
/// For binary clauses only x and y are used.
Vector identity_defect(const Algebra& a, IdentityKind kind, std::span<const Rational> x,
                       std::span<const Rational> y, std::span<const Rational> z);

using TrilinearDefect =
    std::function<Vector(const Vector& x, const Vector& y, const Vector& z)>;

/// Evaluates a trilinear expression on all basis triples of Q^n, in
/// lexicographic order, and reports the first nonzero value.
IdentityReport check_on_basis_triples(std::size_t n, const TrilinearDefect& defect,
                                      const std::string& clause);

}  // namespace antiassoc
