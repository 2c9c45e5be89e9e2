#include "antiassoc/operad.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "antiassoc/errors.hpp"
#include "antiassoc/sparse.hpp"

namespace antiassoc {

namespace {

TreePolynomial poly(const std::string& text) { return parse_polynomial(text); }

void validate_relation(const TreePolynomial& r) {
  for (const auto& [code, coef] : r) {
    if (tree::leaf_count(code) != 3) throw InputError("operad relations must have arity 3: " + format(r));
    const auto counts = tree::label_counts(code, 3);
    if (std::any_of(counts.begin(), counts.end(), [](unsigned c) { return c != 1; })) {
      throw InputError("operad relations must be multilinear in x1, x2, x3: " + format(r));
    }
  }
}

}  // namespace

std::vector<std::string> operad_preset_names() { return {"aass", "jajo", "jajo-dual", "free"}; }

OperadPresentation operad_preset(const std::string& name) {
  if (name == "aass") return {name, GeneratorSymmetry::None, {poly("x1(x2x3) + (x1x2)x3")}};
  if (name == "jajo") return {name, GeneratorSymmetry::Commutative, {poly("x1(x2x3) + x2(x3x1) + x3(x1x2)")}};
  if (name == "jajo-dual") return {name, GeneratorSymmetry::AntiCommutative, {poly("x1(x2x3) - x3(x1x2)")}};
  if (name == "free") return {name, GeneratorSymmetry::None, {}};
  throw InputError("unknown operad preset '" + name + "'");
}

OperadPresentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("operad presentation must be a JSON object");
  OperadPresentation p;
  p.name = j.value("name", "custom");
  try {
    p.symmetry = parse_symmetry(j.value("symmetry", "none"));
  } catch (const nlohmann::json::exception&) {
    throw InputError("operad symmetry must be a string");
  }
  if (!j.contains("relations") || !j["relations"].is_array()) throw InputError("operad presentation needs a relations array");
  for (const auto& r : j["relations"]) {
    if (!r.is_string()) throw InputError("operad relations must be strings");
    TreePolynomial rel = parse_polynomial(r.get<std::string>());
    validate_relation(rel);
    p.relations.push_back(std::move(rel));
  }
  return p;
}

nlohmann::json presentation_to_json(const OperadPresentation& p) {
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : p.relations) rels.push_back(format(r));
  return {{"name", p.name}, {"symmetry", std::string(symmetry_name(p.symmetry))}, {"relations", rels}};
}

std::vector<std::size_t> component_dims(const OperadPresentation& p, std::size_t max_arity) {
  if (max_arity > kMaxOperadArity) {
    throw InputError("operad components are limited to arity <= " + std::to_string(kMaxOperadArity));
  }
  for (const auto& r : p.relations) validate_relation(r);
  MonomialEngine engine(p.symmetry, p.relations);
  std::vector<std::size_t> dims;
  for (std::size_t n = 1; n <= max_arity; ++n) dims.push_back(engine.quotient_dim(Multidegree(n, 1)));
  return dims;
}

std::size_t component_dim(const OperadPresentation& p, std::size_t n) {
  if (n == 0) throw InputError("operad arity must be positive");
  return component_dims(p, n).back();
}

namespace {

const std::array<std::array<unsigned, 3>, 6> kPerms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

int perm_sign(unsigned a, unsigned b, unsigned c) {
  int inversions = (a > b) + (a > c) + (b > c);
  return inversions % 2 == 0 ? 1 : -1;
}

// All child orderings of a tree with the sign of the reordering.
std::vector<std::pair<std::string, int>> orderings(std::string_view code, GeneratorSymmetry s) {
  if (tree::is_leaf(code)) return {{std::string(code), 1}};
  auto [l, r] = tree::children(code);
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [lc, ls] : orderings(l, s)) {
    for (const auto& [rc, rs] : orderings(r, s)) {
      out.emplace_back(tree::node(lc, rc), ls * rs);
      if (s != GeneratorSymmetry::None) {
        out.emplace_back(tree::node(rc, lc), ls * rs * (s == GeneratorSymmetry::AntiCommutative ? -1 : 1));
      }
    }
  }
  return out;
}

// Pairing value of a planar arity-3 tree with itself.
int self_pairing(std::string_view code) {
  auto [l, r] = tree::children(code);
  if (tree::is_leaf(r)) {  // (xi xj) xk
    auto [a, b] = tree::children(l);
    return perm_sign(a[0] - 'a', b[0] - 'a', r[0] - 'a');
  }
  auto [b, c] = tree::children(r);
  return -perm_sign(l[0] - 'a', b[0] - 'a', c[0] - 'a');
}

GeneratorSymmetry dual_symmetry(GeneratorSymmetry s) {
  switch (s) {
    case GeneratorSymmetry::Commutative: return GeneratorSymmetry::AntiCommutative;
    case GeneratorSymmetry::AntiCommutative: return GeneratorSymmetry::Commutative;
    default: return GeneratorSymmetry::None;
  }
}

TreePolynomial relabel(const TreePolynomial& p, const std::array<unsigned, 3>& perm) {
  const std::vector<std::string> subs{tree::leaf(perm[0]), tree::leaf(perm[1]), tree::leaf(perm[2])};
  TreePolynomial out;
  for (const auto& [code, coef] : p) out[tree::substitute(code, subs)] += coef;
  return out;
}

}  // namespace

std::vector<std::string> arity3_monomials(GeneratorSymmetry s) {
  MonomialEngine engine(s, {});
  return engine.monomials(Multidegree(3, 1));
}

Subspace relation_span(const OperadPresentation& p) {
  const auto monos = arity3_monomials(p.symmetry);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
  std::vector<Vector> rows;
  for (const auto& r : p.relations) {
    validate_relation(r);
    for (const auto& perm : kPerms) {
      Vector v(monos.size());
      for (const auto& [code, coef] : canonical(relabel(r, perm), p.symmetry)) v[index.at(code)] += coef;
      rows.push_back(std::move(v));
    }
  }
  return Subspace::span(monos.size(), rows);
}

OperadPresentation quadratic_dual(const OperadPresentation& p) {
  const GeneratorSymmetry ds = dual_symmetry(p.symmetry);
  const auto monos = arity3_monomials(p.symmetry);
  const auto dual_monos = arity3_monomials(ds);
  const Subspace span = relation_span(p);

  // embedded[m] = planar expansion of monomial m
  auto embed = [](const std::string& code, GeneratorSymmetry s) {
    std::map<std::string, int> out;
    for (const auto& [c, sign] : orderings(code, s)) out[c] += sign;
    return out;
  };
  // gram[d][m] = <embed(dual monomial d), embed(monomial m)>
  Matrix gram(dual_monos.size(), monos.size());
  for (std::size_t d = 0; d < dual_monos.size(); ++d) {
    const auto ed = embed(dual_monos[d], ds);
    for (std::size_t m = 0; m < monos.size(); ++m) {
      int value = 0;
      for (const auto& [code, sign] : embed(monos[m], p.symmetry)) {
        if (auto it = ed.find(code); it != ed.end()) value += it->second * sign * self_pairing(code);
      }
      gram(d, m) = value;
    }
  }
  SparseEchelon conditions(dual_monos.size());
  for (const auto& r : span.basis()) {
    const Vector row = gram.apply(r);
    SparseRow sparse;
    for (std::size_t d = 0; d < row.size(); ++d) {
      if (sgn(row[d]) != 0) sparse.emplace(d, row[d]);
    }
    if (!sparse.empty()) conditions.insert(std::move(sparse));
  }
  OperadPresentation dual{p.name + "!", ds, {}};
  const Subspace orthogonal = conditions.kernel();
  for (const auto& v : orthogonal.basis()) {
    TreePolynomial rel;
    for (std::size_t d = 0; d < v.size(); ++d) {
      if (sgn(v[d]) != 0) rel[dual_monos[d]] = v[d];
    }
    dual.relations.push_back(std::move(rel));
  }
  return dual;
}

std::string verdict_name(KoszulVerdict v) { return v == KoszulVerdict::NotKoszul ? "not-koszul" : "inconclusive"; }

namespace {

// Dims up to kMaxOperadArity, and how far they determine the series: all
// orders once a component vanishes, else kMaxOperadArity.
std::pair<std::vector<std::size_t>, std::size_t> known_dims(const OperadPresentation& p, std::size_t order) {
  auto dims = component_dims(p, std::min(order, kMaxOperadArity));
  const bool vanished = std::find(dims.begin(), dims.end(), 0) != dims.end();
  return {dims, vanished ? order : std::min(order, kMaxOperadArity)};
}

}  // namespace

KoszulReport koszul_sign_test(const OperadPresentation& p, std::size_t order) {
  if (order == 0) throw InputError("order must be positive");
  KoszulReport r;
  const OperadPresentation dual = quadratic_dual(p);
  auto [dims, known] = known_dims(p, order);
  auto [dual_dims, dual_known] = known_dims(dual, order);
  r.dims = dims;
  r.dual_dims = dual_dims;
  r.order = dual_known;
  r.series = generating_series(dims, known);
  r.dual_series = generating_series(dual_dims, dual_known);
  r.inverse = series_inverse(r.dual_series, dual_known);

  for (std::size_t n = 1; n <= dual_known; ++n) {
    const Rational c = r.inverse.coefficient(n);
    const int wanted = n % 2 == 0 ? 1 : -1;
    if (sgn(c) != 0 && sgn(c) != wanted) {
      r.sign_obstruction = SeriesObstruction{n, c, std::nullopt};
      break;
    }
  }
  for (std::size_t n = 1; n <= std::min(known, dual_known); ++n) {
    if (r.inverse.coefficient(n) != r.series.coefficient(n)) {
      r.mismatch = SeriesObstruction{n, r.inverse.coefficient(n), r.series.coefficient(n)};
      break;
    }
  }
  if (r.sign_obstruction) {
    r.verdict = KoszulVerdict::NotKoszul;
    r.reason = "coefficient of t^" + std::to_string(r.sign_obstruction->power) + " in the inverse of the dual series is " +
               format_rational(r.sign_obstruction->coefficient) + ", whose sign no generating series can have";
  } else if (r.mismatch) {
    r.verdict = KoszulVerdict::NotKoszul;
    r.reason = "the inverse of the dual series differs from the series of the operad at t^" +
               std::to_string(r.mismatch->power);
  } else {
    r.reason = "no obstruction up to t^" + std::to_string(r.order);
  }
  return r;
}

}  // namespace antiassoc
