#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "antiassoc/monomials.hpp"
#include "antiassoc/power_series.hpp"
#include "antiassoc/subspace.hpp"

namespace antiassoc {

/// Binary quadratic operad: one generator with a symmetry, and relations in
/// arity 3 (multilinear in x1, x2, x3).
struct OperadPresentation {
  std::string name;
  GeneratorSymmetry symmetry = GeneratorSymmetry::None;
  std::vector<TreePolynomial> relations;
};

/// "aass", "jajo", "jajo-dual", "free". InputError otherwise.
OperadPresentation operad_preset(const std::string& name);
std::vector<std::string> operad_preset_names();

/// {"name": ..., "symmetry": "none|commutative|anticommutative",
///  "relations": ["x1(x2x3) + (x1x2)x3", ...]}. Validates arity 3 and
/// multilinearity; throws InputError.
OperadPresentation presentation_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const OperadPresentation& p);

constexpr std::size_t kMaxOperadArity = 5;

/// dim P(n) for n = 1..max_arity. Throws InputError past kMaxOperadArity.
std::vector<std::size_t> component_dims(const OperadPresentation& p, std::size_t max_arity);
std::size_t component_dim(const OperadPresentation& p, std::size_t n);

/// Canonical arity-3 monomials of the free operad on a generator with this
/// symmetry (12, 3 or 3 of them).
std::vector<std::string> arity3_monomials(GeneratorSymmetry s);

/// Span of the relations and their images under relabelling, in the
/// coordinates of arity3_monomials.
Subspace relation_span(const OperadPresentation& p);

/// Quadratic dual. The arity-3 monomials of every symmetry are embedded into
/// the twelve planar-ordered ones (a symmetric monomial goes to the signed
/// sum of all its child orderings). There the pairing is diagonal:
///   <(xi xj) xk, (xi xj) xk> = sign(ijk),  <xi (xj xk), xi (xj xk)> = -sign(ijk).
/// The dual generator has the opposite symmetry (commutative <->
/// anticommutative, none stays none) and its relations are the orthogonal
/// complement of the relation span.
OperadPresentation quadratic_dual(const OperadPresentation& p);

enum class KoszulVerdict { NotKoszul, Inconclusive };
std::string verdict_name(KoszulVerdict v);

struct SeriesObstruction {
  std::size_t power = 0;
  Rational coefficient;
  std::optional<Rational> expected;  // set for functional-equation mismatches
};

struct KoszulReport {
  KoszulVerdict verdict = KoszulVerdict::Inconclusive;
  std::string reason;
  std::size_t order = 0;  // highest power checked
  std::vector<std::size_t> dims;       // of p, arities 1..
  std::vector<std::size_t> dual_dims;  // of the dual
  PowerSeries series;       // g_p
  PowerSeries dual_series;  // g_{p!}
  PowerSeries inverse;      // h with g_{p!}(h(t)) = t
  /// First coefficient of the inverse whose sign is not that of (-1)^n.
  std::optional<SeriesObstruction> sign_obstruction;
  /// First power where the inverse differs from g_p.
  std::optional<SeriesObstruction> mismatch;
};

/// Compares the compositional inverse of g_{p!} with the shape of a
/// generating series. Component dims are computed up to kMaxOperadArity;
/// when a component vanishes all higher ones do, which lets the series be
/// continued exactly to the requested order. Only NotKoszul is ever
/// affirmed.
KoszulReport koszul_sign_test(const OperadPresentation& p, std::size_t order);

}  // namespace antiassoc
