#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "deuring/errors.hpp"
#include "deuring/expr.hpp"
#include "deuring/field_poly.hpp"
#include "deuring/laurent.hpp"
#include "deuring/multipoly.hpp"
#include "deuring/prime.hpp"

using namespace deuring;

namespace {

PrimeModulus prime(unsigned q, const char* text) { return PrimeModulus::parse(ConstantField::make(q), text); }

TPoly random_tpoly(const ConstantField& fq, std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<FieldElement::Code> coeff(0, fq.q - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<FieldElement> c;
  for (int i = deg(rng); i >= 0; --i) c.emplace_back(fq.field, coeff(rng));
  return TPoly(c, fq.zero());
}

Poly<TPoly> random_apoly(const ConstantField& fq, std::mt19937& rng) {
  std::vector<TPoly> c;
  for (int i = std::uniform_int_distribution<int>(0, 4)(rng); i >= 0; --i) c.push_back(random_tpoly(fq, rng, 6));
  return Poly<TPoly>(c, TPoly(fq.zero()));
}

}  // namespace

TEST(FiniteField, FrobeniusOnF4Generator) {
  const auto fq = ConstantField::make(4);
  const auto x = FieldElement::generator(fq.field);
  EXPECT_EQ(frobenius(x, 2, 1), x + fq.one());
  EXPECT_EQ(x * x, x + fq.one());
}

TEST(FiniteField, FrobeniusFixesConstants) {
  const auto p = prime(3, "T^2+1");
  for (FieldElement::Code c = 0; c < 3; ++c) {
    const FieldElement a(p.constants().field, c);
    EXPECT_EQ(frobenius(a.embed(p.residue_field()), 3, 1), a);
  }
  EXPECT_EQ(frobenius(p.alpha(), 3, 2), p.alpha());
  EXPECT_NE(frobenius(p.alpha(), 3, 1), p.alpha());
}

TEST(FiniteField, FrobeniusIsAdditiveExhaustively) {
  for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u}) {
    const auto fq = ConstantField::make(q);
    for (const auto& pr : enumerate_primes(fq, 2)) {
      const auto& K = pr.residue_field();
      if (K->cardinality() > 256) continue;
      for (FieldElement::Code a = 0; a < K->cardinality(); ++a)
        for (FieldElement::Code b = 0; b < K->cardinality(); ++b) {
          const FieldElement x(K, a), y(K, b);
          ASSERT_EQ(frobenius(x + y, q, 1), frobenius(x, q, 1) + frobenius(y, q, 1));
        }
    }
  }
}

TEST(FiniteField, InversesAndTowerEmbedding) {
  const auto p = prime(4, "T^2+T+x");
  const auto F = FiniteField::extension(p.residue_field(), 2, "b");
  EXPECT_EQ(F->cardinality(), 256u);
  for (FieldElement::Code c = 1; c < F->cardinality(); ++c) {
    const FieldElement e(F, c);
    ASSERT_TRUE((e * e.inverse()).is_one());
  }
  // alpha keeps its code in the extension
  EXPECT_EQ(p.alpha().embed(F).code(), p.alpha().code());
  EXPECT_EQ(p.alpha().embed(F) * p.alpha(), (p.alpha() * p.alpha()).embed(F));
}

TEST(FiniteField, RejectsNonPrimePowers) {
  EXPECT_THROW(ConstantField::make(6), DomainError);
  EXPECT_THROW(ConstantField::make(1), DomainError);
}

TEST(FieldPoly, GcdExamples) {
  const auto f2 = ConstantField::make(2);
  const TPoly a = parse_tpoly(f2, "T^2 + T");
  const TPoly t = parse_tpoly(f2, "T");
  EXPECT_EQ(poly_gcd(a, t), t);

  const auto f3 = ConstantField::make(3);
  const TPoly g = parse_tpoly(f3, "2*T^2 + 1");
  EXPECT_EQ(poly_gcd(g, TPoly(f3.zero())), parse_tpoly(f3, "T^2 + 2"));

  const auto kappa = prime(2, "T^2+T+1").residue_field();
  const FieldPoly h = parse_field_poly(kappa, "s^3 + a*s^2 + a*s + 1");
  EXPECT_EQ(derivative(h), parse_field_poly(kappa, "s^2 + a"));
  EXPECT_EQ(poly_gcd(h, derivative(h)), parse_field_poly(kappa, "1"));

  EXPECT_THROW(poly_gcd(TPoly(f2.zero()), TPoly(f2.zero())), UndefinedGcd);
}

TEST(FieldPoly, Irreducibility) {
  const auto f2 = ConstantField::make(2);
  const auto f3 = ConstantField::make(3);
  EXPECT_TRUE(is_irreducible(parse_tpoly(f2, "T^2 + T + 1")));
  EXPECT_FALSE(is_irreducible(parse_tpoly(f2, "T^2 + 1")));
  EXPECT_TRUE(is_irreducible(parse_tpoly(f3, "T^2 + 1")));
  EXPECT_THROW(is_irreducible(parse_tpoly(f3, "2")), DomainError);
}

TEST(FieldPoly, IrreducibleCountsMatchNecklaceFormula) {
  // number of monic irreducibles of degree n over F_q: (1/n) sum_{e|n} mu(e) q^(n/e)
  const std::vector<std::pair<unsigned, std::vector<std::size_t>>> expected = {
      {2, {2, 1, 2, 3}}, {3, {3, 3, 8}}, {4, {4, 6, 20}}, {5, {5, 10}}};
  for (const auto& [q, counts] : expected) {
    const auto fq = ConstantField::make(q);
    const auto primes = enumerate_primes(fq, static_cast<unsigned>(counts.size()));
    for (unsigned d = 1; d <= counts.size(); ++d) {
      std::size_t n = 0;
      for (const auto& p : primes) n += p.degree() == d;
      // T itself is excluded from degree 1
      EXPECT_EQ(n, counts[d - 1] - (d == 1 ? 1 : 0)) << "q=" << q << " d=" << d;
    }
  }
}

TEST(FieldPoly, RootsInExtension) {
  const auto f2 = ConstantField::make(2);
  EXPECT_EQ(roots_in_extension(parse_field_poly(f2.field, "s^2 + s"), 1).size(), 2u);
  EXPECT_TRUE(roots_in_extension(parse_field_poly(f2.field, "s^2 + s + 1"), 1).empty());
  const auto r = roots_in_extension(parse_field_poly(f2.field, "s^2 + s + 1"), 2);
  ASSERT_EQ(r.size(), 2u);
  for (const auto& x : r) EXPECT_TRUE((x * x + x + one_like(x)).is_zero());

  const auto kappa = prime(2, "T^2+T+1").residue_field();
  const FieldPoly h = parse_field_poly(kappa, "s^3 + a*s^2 + a*s + 1");
  EXPECT_EQ(splitting_degree(h), 2u);
  const auto hr = roots_in_extension(h, 2);
  ASSERT_EQ(hr.size(), 3u);
  EXPECT_NE(hr[0], hr[1]);
  EXPECT_NE(hr[1], hr[2]);
  EXPECT_TRUE(std::any_of(hr.begin(), hr.end(), [](const FieldElement& x) { return x.is_one(); }));
  // the cofactor s^2 + (a+1) s + 1 has no root in F_4
  const FieldPoly cof = exact_div(h, parse_field_poly(kappa, "s + 1"));
  EXPECT_EQ(cof, parse_field_poly(kappa, "s^2 + (a + 1)*s + 1"));
  EXPECT_TRUE(roots_in_field(cof, kappa).empty());
}

TEST(FieldPoly, RootsCountWithMultiplicity) {
  std::mt19937 rng(7);
  const auto kappa = prime(3, "T^2+1").residue_field();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FieldElement::Code> codes;
    for (int i = 0; i < 5; ++i) codes.push_back(rng() % kappa->cardinality());
    codes.push_back(1);
    const FieldPoly f = poly_from_codes(kappa, codes);
    const unsigned m = splitting_degree(f);
    EXPECT_EQ(roots_in_extension(f, m).size(), 5u);
  }
  const FieldPoly sq = power(parse_field_poly(kappa, "s + a"), 3) * parse_field_poly(kappa, "s + 1");
  const auto r = roots_in_field(sq, kappa);
  EXPECT_EQ(r.size(), 4u);
  EXPECT_EQ(root_multiplicity(sq, -FieldElement::generator(kappa)), 3u);
}

TEST(Prime, ValidationAndReduction) {
  const auto f2 = ConstantField::make(2);
  EXPECT_THROW(PrimeModulus::parse(f2, "T"), InvalidPrime);
  EXPECT_THROW(PrimeModulus::parse(f2, "T^2 + 1"), InvalidPrime);
  EXPECT_THROW(PrimeModulus::parse(f2, "1"), InvalidPrime);
  EXPECT_THROW(PrimeModulus::parse(ConstantField::make(3), "2*T + 1"), InvalidPrime);
  EXPECT_THROW(PrimeModulus::parse(f2, "T^2 + + 1"), InvalidPrime);
  EXPECT_THROW(parse_tpoly(f2, "T^2 + + 1"), ParseError);

  const auto p = PrimeModulus::parse(f2, "T^2+T+1");
  const auto u2 = parse_apoly(f2, "s^3 + T*s^2 + T^4*s + T^6");
  EXPECT_EQ(to_string(reduce_mod_prime(u2, p)), "s^3 + a*s^2 + a*s + 1");
  EXPECT_TRUE(p.reduce(parse_tpoly(f2, "T^4 + T")).is_zero());
  EXPECT_TRUE(p.reduce(parse_tpoly(f2, "1")).is_one());
  EXPECT_EQ(p.reduce(Laurent::t_power(f2, -1)), p.alpha().inverse());
}

TEST(Prime, FrobeniusPolynomialVanishes) {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const auto fq = ConstantField::make(q);
    for (const auto& p : enumerate_primes(fq, q == 5 ? 2 : 3)) {
      std::uint64_t e = 1;
      for (unsigned i = 0; i < p.degree(); ++i) e *= q;
      EXPECT_TRUE(p.reduce(fq.t_power(e) - fq.T()).is_zero()) << p.to_string();
    }
  }
}

TEST(Prime, ReductionIsARingHomomorphism) {
  std::mt19937 rng(20240611);
  for (const char* text : {"T^2+1", "T^3+2*T+1"}) {
    const auto fq = ConstantField::make(3);
    const auto p = PrimeModulus::parse(fq, text);
    for (int trial = 0; trial < 25; ++trial) {
      const auto f = random_apoly(fq, rng);
      const auto g = random_apoly(fq, rng);
      ASSERT_EQ(reduce_mod_prime(f * g, p), reduce_mod_prime(f, p) * reduce_mod_prime(g, p));
      ASSERT_EQ(reduce_mod_prime(f + g, p), reduce_mod_prime(f, p) + reduce_mod_prime(g, p));
    }
  }
}

TEST(Laurent, Arithmetic) {
  const auto f3 = ConstantField::make(3);
  const Laurent a = parse_laurent(f3, "T^-2 + T");
  const Laurent b = Laurent::t_power(f3, 2);
  EXPECT_EQ(a * b, parse_laurent(f3, "1 + T^3"));
  EXPECT_EQ((a - a).is_zero(), true);
  EXPECT_EQ(a.low_degree(), -2);
  EXPECT_EQ(a.high_degree(), 1);
  EXPECT_EQ(frobenius_pow(a, 3, 1), parse_laurent(f3, "T^-6 + T^3"));
  EXPECT_EQ(parse_laurent(f3, "T^-1 + 2*T^-1"), Laurent(TPoly(f3.zero())));
}

TEST(MultiPoly, ExactEqualityAndSubstitution) {
  const auto f2 = ConstantField::make(2);
  const MultiPoly a = parse_multipoly(f2, "(D0 + T)^2");
  const MultiPoly b = parse_multipoly(f2, "D0^2 + T^2");
  EXPECT_EQ(a, b);
  EXPECT_TRUE((a - b).is_zero());
  EXPECT_NE(a, parse_multipoly(f2, "D0^2 + T^2 + D0*T"));

  const auto f3 = ConstantField::make(3);
  const MultiPoly P = parse_multipoly(f3, "s^2 + T*s + 1");
  // s = Y/theta, cleared by theta^2
  const MultiPoly cleared =
      substitute_cleared(P, Var::s, MultiPoly::variable(f3.zero(), Var::Y), MultiPoly::variable(f3.zero(), Var::theta));
  EXPECT_EQ(cleared, parse_multipoly(f3, "Y^2 + T*Y*theta + theta^2"));
  EXPECT_EQ(substitute(P, Var::s, parse_multipoly(f3, "T")), parse_multipoly(f3, "2*T^2 + 1"));
  EXPECT_EQ(P.degree_in(Var::s), 2);
  EXPECT_THROW(P.unit_inverse(), DomainError);
  EXPECT_THROW(parse_multipoly(f3, "zz + 1"), ParseError);
}

TEST(Render, CanonicalDescendingOrder) {
  const auto f4 = ConstantField::make(4);
  const TPoly t = parse_tpoly(f4, "1 + x*T + T^3");
  EXPECT_EQ(to_string_T(t), "T^3 + x*T + 1");
  EXPECT_EQ(parse_tpoly(f4, to_string_T(t)), t);
  const auto kappa = prime(4, "T^2+T+x").residue_field();
  const FieldPoly f = parse_field_poly(kappa, "(x*a + 1)*s^2 + a");
  EXPECT_EQ(parse_field_poly(kappa, to_string(f)), f);
}
