#include <gtest/gtest.h>

#include "deuring/drinfeld.hpp"
#include "deuring/errors.hpp"
#include "deuring/isogeny_graph.hpp"

using namespace deuring;

namespace {

PrimeModulus prime(unsigned q, const char* text) { return PrimeModulus::parse(ConstantField::make(q), text); }

// (D0 + alpha^q)^(q+1) / D0^q = (D1 + alpha)^(q+1) / D1, cross-multiplied
bool on_curve(const FieldElement& d0, const FieldElement& d1, const FieldElement& alpha, std::uint64_t q) {
  return ((d0 + alpha.pow(q)).pow(q + 1) * d1) == ((d1 + alpha).pow(q + 1) * d0.pow(q));
}

}  // namespace

TEST(IsogenyGraph, QuadraticPrimeOverF2) {
  const auto p = prime(2, "T^2+T+1");
  const auto g = build_supersingular_graph(p);
  ASSERT_EQ(g.vertices.size(), 3u);
  unsigned total = 0;
  for (const auto& e : g.edges) total += e.multiplicity;
  EXPECT_EQ(total, 6u);
  const auto r = verify_component(g);
  EXPECT_EQ(r.size, 3u);
  EXPECT_EQ(r.out_degree_histogram, (std::map<unsigned, std::size_t>{{2, 3}}));
  EXPECT_TRUE(r.closed);
  EXPECT_TRUE(r.connected);
  EXPECT_TRUE(r.regular);
  EXPECT_TRUE(r.edges_on_curve);
  EXPECT_TRUE(r.ok());
}

TEST(IsogenyGraph, DegreeOneIsAllLoops) {
  const auto p = prime(3, "T-1");
  const auto g = build_supersingular_graph(p);
  const auto r = verify_component(g);
  EXPECT_EQ(r.size, 1u);
  EXPECT_EQ(r.self_loops, 3u);
  EXPECT_TRUE(r.ok());
  for (const auto& e : g.edges) EXPECT_EQ(e.to, 0u);
}

TEST(IsogenyGraph, NeighborsAreSupersingularAndOnTheCurve) {
  for (unsigned q : {2u, 3u}) {
    for (const auto& p : enumerate_primes(ConstantField::make(q), 2)) {
      const auto g = build_supersingular_graph(p);
      const auto a = p.alpha().embed(g.ambient);
      for (const auto& v : g.vertices) {
        EXPECT_FALSE(v.is_zero());
        EXPECT_TRUE(evaluate(g.h, v).is_zero());
        const auto n = neighbors(v, p, g.ambient);
        ASSERT_EQ(n.size(), q);
        for (const auto& w : n) {
          EXPECT_TRUE(evaluate(g.h, w).is_zero());
          EXPECT_TRUE(on_curve(v, w, a, q));
        }
        const auto back = reverse_neighbors(v, p, g.ambient);
        ASSERT_EQ(back.size(), q);
        for (const auto& u : back) EXPECT_TRUE(on_curve(u, v, a, q));
      }
    }
  }
}

TEST(IsogenyGraph, EveryComponentIsRegularClosedConnected) {
  for (unsigned q : {2u, 3u, 4u}) {
    for (const auto& p : enumerate_primes(ConstantField::make(q), q == 2 ? 3 : 2)) {
      const auto r = verify_component(build_supersingular_graph(p));
      EXPECT_EQ(r.size, deuring_degree(q, p.degree())) << p.to_string();
      EXPECT_TRUE(r.ok()) << p.to_string();
      EXPECT_TRUE(r.vertices_in_q2d) << p.to_string();
    }
  }
}

TEST(IsogenyGraph, Errors) {
  const auto p = prime(2, "T^2+T+1");
  const auto& kappa = p.residue_field();
  EXPECT_THROW(neighbors(FieldElement::zero(kappa), p, kappa), DomainError);
  EXPECT_THROW(reverse_neighbors(FieldElement::zero(kappa), p, kappa), DomainError);
  // Y^2 + Y + a has trace a + a^2 = 1 over F_2, hence no root in F_4
  try {
    neighbors(FieldElement::one(kappa), p, kappa);
    FAIL() << "expected AmbientTooSmall";
  } catch (const AmbientTooSmall& e) {
    EXPECT_EQ(e.found_roots, 0u);
    EXPECT_EQ(e.expected_roots, 2u);
  }
  const auto F = FiniteField::extension(kappa, 2, "b");
  EXPECT_EQ(neighbors(FieldElement::one(kappa), p, F).size(), 2u);
}

TEST(IsogenyGraph, AmbientIsEnlargedWhenNeeded) {
  const auto p = prime(3, "T-1");
  const auto g = build_supersingular_graph(p);
  EXPECT_EQ(g.h_splitting_degree, 1u);
  EXPECT_EQ(g.ambient_degree, 2u);
}

TEST(IsogenyGraph, ForeignPolynomialIsNotRegular) {
  // s + 1 is not h for q = 2, p = T^2 + T + 1 (1 has neighbors outside {1})
  const auto p = prime(2, "T^2+T+1");
  const FieldPoly f = FieldPoly::x(FieldElement::zero(p.residue_field())) + FieldPoly::constant(FieldElement::one(p.residue_field()));
  const auto r = verify_component(build_supersingular_graph(p, f));
  EXPECT_FALSE(r.closed);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.size, 1u);
}

TEST(IsogenyGraph, Exports) {
  const auto g = build_supersingular_graph(prime(2, "T^2+T+1"));
  const auto j = to_json(g);
  EXPECT_EQ(j["vertices"].size(), 3u);
  unsigned total = 0;
  for (const auto& e : j["edges"]) total += e["multiplicity"].get<unsigned>();
  EXPECT_EQ(total, 6u);
  EXPECT_EQ(j["ambient_generator"], "b");
  const auto rj = to_json(verify_component(g));
  EXPECT_EQ(rj["connected"], true);
  const std::string dot = to_dot(g);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_NE(dot.find("v0 ->"), std::string::npos);
  EXPECT_EQ(to_dot(g), dot);
}
