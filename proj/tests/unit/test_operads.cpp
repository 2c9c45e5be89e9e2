#include <gtest/gtest.h>

#include "antiassoc/errors.hpp"
#include "antiassoc/operad.hpp"
#include "antiassoc/power_series.hpp"
#include "oracles.hpp"

using namespace antiassoc;

namespace {

std::vector<Rational> coeffs(std::initializer_list<Rational> c) { return c; }

Rational q(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

// Relation span spanned by a single relation and its relabelings, as in
// the core but built from explicit strings.
Subspace orbit_span(GeneratorSymmetry s, const std::vector<std::string>& relations) {
  OperadPresentation p{"probe", s, {}};
  for (const auto& r : relations) p.relations.push_back(parse_polynomial(r));
  return relation_span(p);
}

}  // namespace

TEST(PowerSeries, InverseMatchesLagrangeOnRandomSeries) {
  oracle::Rng rng(81);
  for (int trial = 0; trial < 25; ++trial) {
    PowerSeries g;
    g.coeffs.push_back(rng.integer(1, 3) * (rng.integer(0, 1) ? 1 : -1));
    for (int k = 0; k < 4; ++k) g.coeffs.push_back(rng.rational());
    for (int k = 0; k < 4; ++k) g.coeffs.push_back(0);
    const auto h = series_inverse(g, 9);
    EXPECT_EQ(h.coeffs, oracle::lagrange_inverse(g.coeffs, 9)) << format_series(g);
    const auto id = compose(g, h);
    for (std::size_t k = 1; k <= 9; ++k) EXPECT_EQ(id.coefficient(k), k == 1 ? 1 : 0);
  }
}

TEST(PowerSeries, AntiAssociativeOperadInverse) {
  const PowerSeries g{coeffs({-1, 1, -1, 0, 0, 0, 0, 0, 0})};
  const auto h = series_inverse(g, 9);
  EXPECT_EQ(h.coeffs, coeffs({-1, 1, -1, 0, 4, -14, 30, -33, -55}));
  EXPECT_EQ(h.coeffs, oracle::lagrange_inverse(g.coeffs, 9));
}

TEST(PowerSeries, JacobiJordanDualInverse) {
  const PowerSeries g{coeffs({-1, q(1, 2), q(-1, 6), 0, 0, 0, 0})};
  const auto h = series_inverse(g, 7);
  EXPECT_EQ(h.coeffs, coeffs({-1, q(1, 2), q(-1, 3), q(5, 24), q(-1, 12), q(-7, 144), q(13, 72)}));
}

TEST(PowerSeries, GeneratingSeriesAndFormatting) {
  const auto g = generating_series({1, 1, 2, 5, 15}, 5);
  EXPECT_EQ(g.coeffs, coeffs({-1, q(1, 2), q(-1, 3), q(5, 24), q(-1, 8)}));
  EXPECT_EQ(format_series(PowerSeries{coeffs({-1, 1, 0, 0, 0, q(-7, 144)})}), "-t + t^2 - 7/144 t^6");
  EXPECT_EQ(parse_series("-1,1/2,-1/6").coeffs, coeffs({-1, q(1, 2), q(-1, 6)}));
  EXPECT_EQ(g.coefficient(9), 0);
}

TEST(PowerSeries, Errors) {
  EXPECT_THROW(series_inverse(PowerSeries{coeffs({0, 1})}, 2), DomainError);
  EXPECT_THROW(series_inverse(PowerSeries{coeffs({-1, 1})}, 5), InputError);
  EXPECT_THROW(parse_series("1,,2"), InputError);
  EXPECT_THROW(parse_series("a"), InputError);
}

TEST(Operads, ComponentDimensionsOfPresets) {
  EXPECT_EQ(component_dims(operad_preset("aass"), 5), (std::vector<std::size_t>{1, 2, 6, 0, 0}));
  EXPECT_EQ(component_dims(operad_preset("jajo"), 5), (std::vector<std::size_t>{1, 1, 2, 5, 15}));
  EXPECT_EQ(component_dims(operad_preset("jajo-dual"), 5), (std::vector<std::size_t>{1, 1, 1, 0, 0}));
  // Free magma operad: n! times the Catalan number C(n-1).
  EXPECT_EQ(component_dims(operad_preset("free"), 5), (std::vector<std::size_t>{1, 2, 12, 120, 1680}));
  EXPECT_THROW(component_dim(operad_preset("aass"), 6), InputError);
  EXPECT_THROW(operad_preset("nope"), InputError);
}

TEST(Operads, ArityThreeIsMonomialsModuloRelationOrbit) {
  for (const auto& name : operad_preset_names()) {
    const auto p = operad_preset(name);
    EXPECT_EQ(component_dim(p, 3), arity3_monomials(p.symmetry).size() - relation_span(p).dim()) << name;
  }
  EXPECT_EQ(arity3_monomials(GeneratorSymmetry::None).size(), 12u);
  EXPECT_EQ(arity3_monomials(GeneratorSymmetry::Commutative).size(), 3u);
  EXPECT_EQ(arity3_monomials(GeneratorSymmetry::AntiCommutative).size(), 3u);
}

TEST(Operads, AntiAssociativeOperadIsSelfDual) {
  const auto p = operad_preset("aass");
  const auto dual = quadratic_dual(p);
  EXPECT_EQ(dual.symmetry, GeneratorSymmetry::None);
  EXPECT_EQ(relation_span(dual), orbit_span(GeneratorSymmetry::None, {"x1(x2x3) + (x1x2)x3"}));
  EXPECT_EQ(relation_span(dual).dim(), 6u);
}

TEST(Operads, JacobiJordanDual) {
  const auto dual = quadratic_dual(operad_preset("jajo"));
  EXPECT_EQ(dual.symmetry, GeneratorSymmetry::AntiCommutative);
  EXPECT_EQ(relation_span(dual), orbit_span(GeneratorSymmetry::AntiCommutative, {"x1(x2x3) - x3(x1x2)"}));
  EXPECT_EQ(relation_span(dual), relation_span(operad_preset("jajo-dual")));
}

TEST(Operads, DualIsAnInvolutionAndComplementary) {
  for (const auto& name : operad_preset_names()) {
    const auto p = operad_preset(name);
    const auto dual = quadratic_dual(p);
    EXPECT_EQ(relation_span(quadratic_dual(dual)), relation_span(p)) << name;
    EXPECT_EQ(relation_span(p).dim() + relation_span(dual).dim(), arity3_monomials(p.symmetry).size()) << name;
  }
}

TEST(Operads, PresentationJsonRoundTrip) {
  for (const auto& name : operad_preset_names()) {
    const auto p = operad_preset(name);
    const auto back = presentation_from_json(presentation_to_json(p));
    EXPECT_EQ(back.symmetry, p.symmetry);
    EXPECT_EQ(relation_span(back), relation_span(p)) << name;
  }
  EXPECT_THROW(presentation_from_json(nlohmann::json::parse(R"j({"name":"x","symmetry":"none","relations":["x1x2"]})j")),
               InputError);
  EXPECT_THROW(
      presentation_from_json(nlohmann::json::parse(R"j({"name":"x","symmetry":"none","relations":["x1(x1x2)"]})j")),
      InputError);
  EXPECT_THROW(presentation_from_json(nlohmann::json::parse(R"j({"name":"x","symmetry":"odd","relations":[]})j")),
               InputError);
}

TEST(Koszul, AntiAssociativeOperadFailsSignTest) {
  const auto r = koszul_sign_test(operad_preset("aass"), 9);
  EXPECT_EQ(r.verdict, KoszulVerdict::NotKoszul);
  EXPECT_EQ(r.dual_dims, (std::vector<std::size_t>{1, 2, 6, 0, 0}));
  EXPECT_EQ(r.inverse.coeffs, coeffs({-1, 1, -1, 0, 4, -14, 30, -33, -55}));
  ASSERT_TRUE(r.sign_obstruction.has_value());
  EXPECT_EQ(r.sign_obstruction->power, 5u);
  EXPECT_EQ(r.sign_obstruction->coefficient, 4);
}

TEST(Koszul, JacobiJordanOperadFailsSignTest) {
  const auto r = koszul_sign_test(operad_preset("jajo"), 7);
  EXPECT_EQ(r.verdict, KoszulVerdict::NotKoszul);
  EXPECT_EQ(r.dual_dims, (std::vector<std::size_t>{1, 1, 1, 0, 0}));
  ASSERT_TRUE(r.sign_obstruction.has_value());
  EXPECT_EQ(r.sign_obstruction->power, 6u);
  EXPECT_EQ(r.sign_obstruction->coefficient, q(-7, 144));
  EXPECT_EQ(r.inverse.coefficient(7), q(13, 72));
  ASSERT_TRUE(r.mismatch.has_value());
  EXPECT_EQ(r.mismatch->power, 5u);
}

TEST(Koszul, FreeOperadIsInconclusive) {
  const auto r = koszul_sign_test(operad_preset("free"), 9);
  EXPECT_EQ(r.verdict, KoszulVerdict::Inconclusive);
  EXPECT_FALSE(r.sign_obstruction.has_value());
  EXPECT_EQ(verdict_name(r.verdict), "inconclusive");
}
