#include "commands.hpp"

#include <fstream>

#include "antiassoc/algebra_io.hpp"
#include "antiassoc/cohomology.hpp"
#include "antiassoc/deformation.hpp"
#include "antiassoc/errors.hpp"
#include "antiassoc/fixtures.hpp"
#include "antiassoc/free_algebras.hpp"
#include "antiassoc/homology.hpp"
#include "antiassoc/identities.hpp"
#include "antiassoc/multilinear.hpp"
#include "antiassoc/operad.hpp"
#include "antiassoc/operators.hpp"
#include "antiassoc/polarization.hpp"
#include "antiassoc/power_series.hpp"

namespace antiassoc::cli {

using nlohmann::json;

namespace {

Algebra load_input(const Options& o, Report& r) {
  if (o.file.empty()) throw InputError("an algebra file is required");
  r.inputs["file"] = file_digest(o.file);
  return load_algebra(o.file);
}

MultilinearMap load_map(const std::string& path, json& digest) {
  digest = file_digest(path);
  return load_multilinear(path);
}

json series_to_json(const PowerSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(format_rational(c));
  return {{"coefficients", coeffs}, {"text", format_series(s)}};
}

json dims_to_json(const std::vector<std::size_t>& dims) { return json(dims); }

json graded_to_json(const GradedAlgebra& g) {
  json degrees = json::array();
  for (const auto& s : g.grading) degrees.push_back(s.dim());
  return {{"dim", g.algebra.dim()}, {"degree_dims", degrees}, {"algebra", algebra_to_json(g.algebra)}};
}

std::vector<std::string> indices_to_names(const std::vector<std::string>& names, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(names.at(i));
  return out;
}

// First nonzero value of a multilinear map, or null.
json first_nonzero(const MultilinearMap& m, const std::vector<std::string>& names) {
  for (std::size_t flat = 0; flat < m.size(); ++flat) {
    if (!is_zero(m.at(flat))) {
      return {{"at", indices_to_names(names, m.indices(flat))}, {"value", format_combination(names, m.at(flat))}};
    }
  }
  return nullptr;
}

bool is_free_aa(const Algebra& a, std::size_t k) {
  return a.dim() == k + k * k + k * k * k && a == free_anti_associative(k).algebra;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out + ")";
}

}  // namespace

Report cmd_check(const Options& o) {
  Report r{"check"};
  const Algebra a = load_input(o, r);
  std::vector<IdentityKind> kinds;
  if (o.identities.empty()) {
    kinds.assign(std::begin(kAllIdentityKinds), std::end(kAllIdentityKinds));
  } else {
    for (const auto& name : o.identities) kinds.push_back(parse_identity_kind(name));
  }
  json requested = json::array();
  json identities = json::object();
  for (auto kind : kinds) {
    const std::string name(identity_name(kind));
    requested.push_back(name);
    identities[name] = witness_to_json(a.basis_names(), check_identity(a, kind));
  }
  r.inputs["identities"] = requested;
  const auto nil = nilindex(a);
  r.results = {{"dim", a.dim()}, {"identities", identities}, {"nilindex", nil ? json(*nil) : json(nullptr)}};
  if (kinds.size() == 1) r.results["holds"] = identities.begin().value()["holds"];
  return r;
}

Report cmd_free_aa(const Options& o) {
  Report r{"free-aa"};
  r.inputs["k"] = o.generators;
  r.results = graded_to_json(free_anti_associative(o.generators));
  r.results["generators"] = o.generators;
  return r;
}

Report cmd_free_comm(const Options& o) {
  Report r{"free-comm"};
  r.inputs["p"] = o.generators;
  r.results = graded_to_json(free_commutative_aa(o.generators));
  r.results["generators"] = o.generators;
  return r;
}

Report cmd_free_anticomm(const Options& o) {
  Report r{"free-anticomm"};
  r.inputs["p"] = o.generators;
  r.results = graded_to_json(free_anticommutative_aa(o.generators));
  r.results["generators"] = o.generators;
  return r;
}

Report cmd_free_jj_dim(const Options& o) {
  Report r{"free-jj-dim"};
  r.inputs = {{"p", o.generators}, {"d", o.degree}};
  json parts = json::array();
  std::size_t total = 0;
  for (const auto& part : free_jacobi_jordan_component(o.generators, o.degree)) {
    json md = json::array();
    for (auto v : part.multidegree) md.push_back(v);
    parts.push_back({{"multidegree", md}, {"dim", part.dim}, {"basis", part.basis}});
    total += part.dim;
  }
  r.results = {{"generators", o.generators}, {"degree", o.degree}, {"dim", total}, {"components", parts}};
  return r;
}

Report cmd_derivations(const Options& o) {
  Report r{"derivations"};
  const Algebra a = load_input(o, r);
  r.inputs["anti"] = o.anti;
  r.inputs["inner"] = o.inner;
  const std::size_t n = a.dim();
  Subspace space;
  std::string kind;
  if (o.inner) {
    space = inner_anti_derivations(a);
    kind = "inner-anti-derivations";
  } else if (o.anti) {
    space = anti_derivation_space(a);
    kind = "anti-derivations";
  } else {
    space = derivation_space(a);
    kind = "derivations";
  }
  json basis = json::array();
  const auto endos = endo_basis(space, n);
  for (const auto& f : endos) basis.push_back(matrix_to_json(f));
  r.results = {{"kind", kind}, {"dim", space.dim()}, {"basis", basis}};

  if (!o.inner && check_identity(a, IdentityKind::AntiAssociative).holds) {
    json failure = nullptr;
    for (std::size_t b = 0; b < endos.size() && failure.is_null(); ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        const Vector e = unit_vector(n, x);
        Endo lhs = commutator(inner_anti_derivation(a, e), endos[b]);
        lhs += inner_anti_derivation(a, endos[b].apply(e));
        if (!lhs.is_zero()) {
          failure = {{"basis_element", b}, {"x", a.basis_names()[x]}};
          break;
        }
      }
    }
    r.results["bracket_relation"] = {{"relation", "[L_x + R_x, f] = -(L_f(x) + R_f(x))"},
                                     {"holds", failure.is_null()},
                                     {"first_failure", failure}};
    if (!failure.is_null()) {
      r.warnings.push_back("[L_x + R_x, f] = -(L_f(x) + R_f(x)) fails on " + kind + " (basis element " +
                           std::to_string(failure["basis_element"].get<std::size_t>()) + ", x = " +
                           failure["x"].get<std::string>() + ")");
    }
  }
  for (std::size_t k = 1; k <= 2; ++k) {
    if (!is_free_aa(a, k)) continue;
    std::size_t reference = 0;
    std::string formula;
    if (o.inner) {
      reference = k + k * k;
      formula = "k + k^2";
    } else if (o.anti) {
      reference = 1 + k * k + k * k * k;
      formula = "1 + k^2 + k^3";
    }
    if (reference != 0 && reference != space.dim()) {
      r.warnings.push_back("free anti-associative algebra on " + std::to_string(k) + " generator(s): computed dim " +
                           std::to_string(space.dim()) + " differs from the reference formula " + formula + " = " +
                           std::to_string(reference));
    }
  }
  return r;
}

Report cmd_polarize(const Options& o) {
  Report r{"polarize"};
  const Algebra a = load_input(o, r);
  const Polarization p = polarize(a);
  r.results = {{"rho", multilinear_to_json(p.rho)},
               {"psi", multilinear_to_json(p.psi)},
               {"rho_jacobi_jordan", witness_to_json(a.basis_names(), check_identity(p.rho.to_algebra(), IdentityKind::JacobiJordan))}};
  if (check_identity(a, IdentityKind::AntiAssociative).holds) {
    json identities = json::array();
    for (const auto& id : check_polarization_identities(a)) {
      json entry = witness_to_json(a.basis_names(), id.report);
      entry["name"] = id.name;
      entry["formula"] = id.formula;
      identities.push_back(entry);
      if (!id.report.holds) {
        r.warnings.push_back("identity " + id.formula + " fails at " +
                             join_names(indices_to_names(a.basis_names(), id.report.witness->indices)) +
                             " with defect " + format_combination(a.basis_names(), id.report.witness->defect));
      }
    }
    r.results["identities"] = identities;
  }
  return r;
}

Report cmd_deform(const Options& o) {
  Report r{"deform"};
  const Algebra mu0 = load_input(o, r);
  if (o.order == 0) throw InputError("--order must be at least 1");
  std::vector<MultilinearMap> phis;
  json digests = json::array();
  for (const auto& path : o.phis) {
    json d;
    phis.push_back(load_map(path, d));
    digests.push_back(d);
  }
  r.inputs["phis"] = digests;
  r.inputs["order"] = o.order;
  const auto names = mu0.basis_names();
  const auto residuals = deformation_residuals(mu0, phis, o.order);
  json list = json::array();
  bool valid = true;
  for (std::size_t k = 0; k < residuals.size(); ++k) {
    const bool zero = residuals[k].is_zero();
    valid = valid && zero;
    list.push_back({{"k", k + 1}, {"zero", zero}, {"first_nonzero", first_nonzero(residuals[k], names)}});
  }
  r.results = {{"order", o.order}, {"valid", valid}, {"residuals", list}};
  if (!phis.empty() && residuals.front().is_zero() && check_identity(mu0, IdentityKind::AntiCommutative).holds) {
    const AntiPoissonTriple t = classical_limit(mu0, phis.front());
    r.results["classical_limit"] = {
        {"rho", multilinear_to_json(t.rho)},
        {"anti_poisson", witness_to_json(names, check_anti_poisson(t))},
        {"symmetrized_second_order_zero", symmetrized_second_order_defect(phis.front()).is_zero()}};
  }
  return r;
}

Report cmd_anti_poisson(const Options& o) {
  Report r{"anti-poisson"};
  if (o.psi.empty() || o.rho.empty()) throw InputError("--psi and --rho are required");
  json dpsi, drho;
  AntiPoissonTriple t;
  t.psi = load_map(o.psi, dpsi);
  t.rho = load_map(o.rho, drho);
  t.space_dim = t.psi.dim();
  r.inputs = {{"psi", dpsi}, {"rho", drho}};
  r.results = witness_to_json(Algebra::default_names(t.space_dim), check_anti_poisson(t));
  return r;
}

Report cmd_homology(const Options& o) {
  Report r{"homology"};
  const Algebra a = load_input(o, r);
  const SignConvention conv = parse_convention(o.convention);
  r.inputs["degree"] = o.degree;
  r.inputs["convention"] = convention_name(conv);
  const HomologyReport h = homology(a, o.degree, conv);
  std::vector<std::string> words;
  if (o.degree == 0) {
    words = a.basis_names();
  } else {
    for (const auto& w : chain_space(a, o.degree, conv).words) words.push_back(format_word(a, w));
  }
  auto basis = [&words](const Subspace& s) {
    json out = json::array();
    for (const auto& v : s.basis()) out.push_back(format_combination(words, v));
    return out;
  };
  r.results = {{"degree", o.degree},
               {"convention", convention_name(conv)},
               {"chain_dim", h.chain_dim},
               {"dim_ker", h.dim_ker},
               {"dim_im", h.dim_im},
               {"image_in_kernel", h.image_in_kernel},
               {"homology_dim", h.homology_dim ? json(*h.homology_dim) : json(nullptr)},
               {"bases", {{"chain", words}, {"kernel", basis(h.kernel)}, {"image", basis(h.image)}}}};
  if (!h.image_in_kernel) {
    r.warnings.push_back("im b_" + std::to_string(o.degree + 1) + " is not contained in ker b_" +
                         std::to_string(o.degree) + " under the " + convention_name(conv) +
                         " convention; homology is undefined there");
  }
  if (o.degree == 1 && conv == SignConvention::Symmetric && is_free_aa(a, 1)) {
    // reference spans for the free algebra on one generator
    const ChainSpace c = chain_space(a, 1, conv);
    std::vector<Vector> ref;
    for (const Word& w : {Word{0, 1}, Word{1, 1}, Word{1, 2}, Word{2, 2}}) ref.push_back(unit_vector(c.dim(), c.index.at(w)));
    const Subspace reference = Subspace::span(c.dim(), ref);
    r.results["reference"] = {{"kernel", basis(reference)}, {"image", basis(reference)}, {"homology_dim", 0}};
    std::string spans;
    for (const auto& w : basis(reference)) spans += (spans.empty() ? "" : ", ") + w.get<std::string>();
    if (!(h.kernel == reference)) {
      r.warnings.push_back("ker b_1 is " + std::to_string(h.dim_ker) + "-dimensional and differs from the reference span " +
                           spans);
    }
    if (!(h.image == reference)) r.warnings.push_back("im b_2 differs from the reference span " + spans);
    if (h.homology_dim != std::optional<std::size_t>(0)) {
      r.warnings.push_back("H_1 has dimension " +
                           (h.homology_dim ? std::to_string(*h.homology_dim) : std::string("undefined")) +
                           ", reference value 0");
    }
  }
  return r;
}

Report cmd_cohomology(const Options& o) {
  Report r{"cohomology"};
  const Algebra a = load_input(o, r);
  r.inputs["jj"] = o.jj;
  r.inputs["degree"] = o.degree;
  const std::size_t n = a.dim();
  const CohomologyDims d = o.jj ? jj_cohomology_dims(a) : standard_cohomology_dims(a);
  r.results = {{"complex", o.jj ? "jacobi-jordan" : "standard"},
               {"h1", d.h1},
               {"h2", d.h2},
               {"z3", d.z3},
               {"image_in_kernel", d.image_in_kernel}};
  if (!d.image_in_kernel) r.warnings.push_back("im delta1 is not contained in ker delta2; h2 is not a homology dimension");
  if (o.degree == 1) {
    json basis = json::array();
    for (const auto& f : endo_basis(d.cocycles1, n)) basis.push_back(matrix_to_json(f));
    r.results["cocycles"] = basis;
  } else if (o.degree == 2) {
    json basis = json::array();
    for (const auto& v : d.cocycles2.basis()) basis.push_back(multilinear_to_json(MultilinearMap::unflatten(2, n, v)));
    r.results["cocycles"] = basis;
  } else if (o.degree == 3) {
    if (o.jj) throw InputError("--degree 3 is available for the standard complex only");
    const ComplexCheck c = check_delta3_delta2(a);
    json defects = json::array();
    for (const auto& e : c.defects) {
      defects.push_back({{"cochain", e.cochain},
                         {"component", e.component},
                         {"at", indices_to_names(a.basis_names(), e.indices)},
                         {"value", format_combination(a.basis_names(), e.value)}});
    }
    r.results["delta3_delta2"] = {{"holds", c.holds},
                                  {"cochains_tested", c.cochains_tested},
                                  {"nonzero_values_by_component", c.nonzero_values},
                                  {"defects", defects}};
    if (!c.holds) {
      std::string counts;
      for (std::size_t i = 0; i < 4; ++i) counts += (i ? ", " : "") + std::to_string(c.nonzero_values[i]);
      r.warnings.push_back("delta3 o delta2 is not zero; nonzero values per component: " + counts);
    }
  } else if (o.degree != 0) {
    throw InputError("--degree must be 1, 2 or 3");
  }
  return r;
}

namespace {

OperadPresentation load_presentation(const Options& o, Report& r) {
  if (o.preset.empty() == o.relations.empty()) throw InputError("give exactly one of --preset and --relations");
  if (!o.preset.empty()) {
    r.inputs["preset"] = o.preset;
    return operad_preset(o.preset);
  }
  r.inputs["relations"] = file_digest(o.relations);
  json j;
  try {
    j = json::parse(read_text_file(o.relations));
  } catch (const json::parse_error& e) {
    throw InputError(o.relations + ": " + e.what());
  }
  return presentation_from_json(j);
}

// Reference component dims and series coefficients for the presets.
void compare(Report& r, const std::string& what, const Rational& computed, const Rational& reference) {
  if (computed != reference) {
    r.warnings.push_back(what + ": computed " + format_rational(computed) + ", reference value " +
                         format_rational(reference));
  }
}

}  // namespace

Report cmd_operad(const Options& o) {
  Report r{"operad"};
  const OperadPresentation p = load_presentation(o, r);
  r.inputs["max_arity"] = o.max_arity;
  const auto dims = component_dims(p, o.max_arity);
  const OperadPresentation dual = quadratic_dual(p);
  r.results = {{"presentation", presentation_to_json(p)},
               {"dims", dims_to_json(dims)},
               {"relation_span_dim", relation_span(p).dim()},
               {"dual", presentation_to_json(dual)}};
  if (p.name == "jajo" && !o.preset.empty()) {
    if (dims.size() >= 4) compare(r, "dim JaJo(4)", dims[3], 5);
    if (dims.size() >= 5) compare(r, "dim JaJo(5)", dims[4], 23);
  }
  return r;
}

Report cmd_koszul(const Options& o) {
  Report r{"koszul"};
  const OperadPresentation p = load_presentation(o, r);
  if (o.order == 0) throw InputError("--order must be at least 1");
  r.inputs["order"] = o.order;
  const KoszulReport k = koszul_sign_test(p, o.order);
  auto obstruction = [](const std::optional<SeriesObstruction>& s) -> json {
    if (!s) return nullptr;
    json j{{"power", s->power}, {"coefficient", format_rational(s->coefficient)}};
    if (s->expected) j["expected"] = format_rational(*s->expected);
    return j;
  };
  r.results = {{"verdict", verdict_name(k.verdict)},
               {"reason", k.reason},
               {"order", k.order},
               {"dims", dims_to_json(k.dims)},
               {"dual_dims", dims_to_json(k.dual_dims)},
               {"series", series_to_json(k.series)},
               {"dual_series", series_to_json(k.dual_series)},
               {"inverse", series_to_json(k.inverse)},
               {"sign_obstruction", obstruction(k.sign_obstruction)},
               {"mismatch", obstruction(k.mismatch)}};
  if (o.preset == "aass") {
    const std::vector<Rational> reference{-1, 1, -1, 0, 4, -14, 30, -33, -55};
    for (std::size_t n = 1; n <= std::min(k.inverse.order(), reference.size()); ++n) {
      compare(r, "coefficient of t^" + std::to_string(n) + " in the inverse series", k.inverse.coefficient(n),
              reference[n - 1]);
    }
  } else if (o.preset == "jajo") {
    const std::vector<Rational> inverse{-1, Rational(1, 2), Rational(-1, 3), Rational(5, 24), Rational(-1, 12),
                                        Rational(-7, 144), Rational(13, 72)};
    for (std::size_t n = 1; n <= std::min(k.inverse.order(), inverse.size()); ++n) {
      compare(r, "coefficient of t^" + std::to_string(n) + " in the inverse series", k.inverse.coefficient(n),
              inverse[n - 1]);
    }
    const std::vector<Rational> series{-1, Rational(1, 2), Rational(-1, 3), Rational(1, 6), Rational(3, 20)};
    for (std::size_t n = 1; n <= std::min(k.series.order(), series.size()); ++n) {
      compare(r, "coefficient of t^" + std::to_string(n) + " in the JaJo series", k.series.coefficient(n),
              series[n - 1]);
    }
  }
  return r;
}

Report cmd_series_invert(const Options& o) {
  Report r{"series-invert"};
  PowerSeries g = parse_series(o.coeffs);
  const std::size_t order = o.order == 0 ? g.order() : o.order;
  // the coefficients describe a polynomial
  if (g.coeffs.size() < order) g.coeffs.resize(order, 0);
  r.inputs = {{"coeffs", o.coeffs}, {"order", order}};
  const PowerSeries h = series_inverse(g, order);
  PowerSeries truncated{std::vector<Rational>(g.coeffs.begin(), g.coeffs.begin() + static_cast<std::ptrdiff_t>(order))};
  PowerSeries identity{std::vector<Rational>(order, 0)};
  identity.coeffs[0] = 1;
  r.results = {{"input", series_to_json(g)},
               {"inverse", series_to_json(h)},
               {"defining_equation_holds", compose(truncated, h) == identity}};
  return r;
}

Report cmd_catalog(const Options& o) {
  Report r{"catalog"};
  json list = json::array();
  json exported = json::array();
  std::filesystem::path dir;
  if (!o.export_dir.empty()) {
    dir = resolve_output(o.export_dir);
    std::filesystem::create_directories(dir);
    r.inputs["export"] = o.export_dir;
  }
  for (const auto& f : fixtures()) {
    const Algebra& a = f.algebra;
    json products = json::array();
    for (const auto& [i, j] : a.nonzero_products()) {
      products.push_back(a.basis_names()[i] + a.basis_names()[j] + " = " +
                         format_combination(a.basis_names(), a.product(i, j)));
    }
    json properties = json::object();
    for (auto kind : kAllIdentityKinds) properties[std::string(identity_name(kind))] = check_identity(a, kind).holds;
    const auto nil = nilindex(a);
    list.push_back({{"name", f.name},
                    {"source", f.source},
                    {"description", f.description},
                    {"dim", a.dim()},
                    {"basis", a.basis_names()},
                    {"products", products},
                    {"properties", properties},
                    {"nilindex", nil ? json(*nil) : json(nullptr)}});
    if (!dir.empty()) {
      const auto path = dir / (f.name + ".alg");
      save_algebra(a, path);
      exported.push_back(f.name + ".alg");
    }
  }
  r.results = {{"fixtures", list}};
  if (!dir.empty()) r.results["exported"] = exported;
  return r;
}

}  // namespace antiassoc::cli
