#include <gtest/gtest.h>

#include <random>

#include "deuring/drinfeld.hpp"
#include "deuring/errors.hpp"
#include "deuring/expr.hpp"
#include "deuring/ore.hpp"

using namespace deuring;

namespace {

struct Setup {
  ConstantField fq;
  PrimeModulus p;
  FieldPtr F;  // degree-2 extension of the residue field
  FieldElement zero, one, gamma;
};

Setup make_setup(unsigned q, const char* prime) {
  const auto fq = ConstantField::make(q);
  const auto p = PrimeModulus::parse(fq, prime);
  const auto F = FiniteField::extension(p.residue_field(), 2, "b");
  return {fq, p, F, FieldElement::zero(F), FieldElement::one(F), p.alpha().embed(F)};
}

FieldElement random_element(const FieldPtr& F, std::mt19937& rng) {
  return {F, std::uniform_int_distribution<FieldElement::Code>(0, F->cardinality() - 1)(rng)};
}

OrePoly<FieldElement> random_ore(std::uint64_t q, const FieldPtr& F, std::mt19937& rng) {
  std::vector<FieldElement> c;
  for (int i = std::uniform_int_distribution<int>(0, 4)(rng); i >= 0; --i) c.push_back(random_element(F, rng));
  return OrePoly<FieldElement>(q, c, FieldElement::zero(F));
}

TPoly random_tpoly(const ConstantField& fq, std::mt19937& rng) {
  std::vector<FieldElement> c;
  for (int i = std::uniform_int_distribution<int>(0, 3)(rng); i >= 0; --i)
    c.emplace_back(fq.field, std::uniform_int_distribution<FieldElement::Code>(0, fq.q - 1)(rng));
  return TPoly(c, fq.zero());
}

}  // namespace

TEST(Ore, TauCommutesPastScalars) {
  const auto S = make_setup(3, "T^2+1");
  const FieldElement a = FieldElement::generator(S.F) + S.gamma;
  const auto tau = OrePoly<FieldElement>::tau(3, S.zero);
  const auto lhs = tau * OrePoly<FieldElement>::constant(3, a);
  EXPECT_EQ(lhs, OrePoly<FieldElement>(3, {S.zero, a.pow(3)}, S.zero));
  EXPECT_EQ(OrePoly<FieldElement>::constant(3, a) * tau, OrePoly<FieldElement>(3, {S.zero, a}, S.zero));
}

TEST(Ore, LegendreFactorization) {
  for (unsigned q : {2u, 3u, 4u}) {
    const auto fq = ConstantField::make(q);
    const auto p = enumerate_primes(fq, 2).back();
    const FieldPoly zero(FieldElement::zero(p.residue_field()));
    const FieldPoly D = FieldPoly::x(zero.zero());
    const FieldPoly g = FieldPoly::constant(p.alpha());
    const FieldPoly one = one_like(D);
    const OrePoly<FieldPoly> left(q, {-g, D}, zero);
    const OrePoly<FieldPoly> right(q, {-one, one}, zero);
    EXPECT_EQ(left * right, legendre_psi(q, D, g));
    EXPECT_EQ(left * right, symbolic_psi_T(p));
    // (D t)(D t) = D^(1+q) t^2
    const OrePoly<FieldPoly> Dt(q, {zero, D}, zero);
    EXPECT_EQ(Dt * Dt, OrePoly<FieldPoly>(q, {zero, zero, power(D, q + 1)}, zero));
  }
}

TEST(Ore, TwistIsARingEndomorphism) {
  std::mt19937 rng(1234);
  const auto S = make_setup(4, "T^2+T+x");
  for (int i = 0; i < 200; ++i) {
    const auto a = random_element(S.F, rng), b = random_element(S.F, rng);
    ASSERT_EQ(frobenius_pow(a * b, 4, 1), frobenius_pow(a, 4, 1) * frobenius_pow(b, 4, 1));
    ASSERT_EQ(frobenius_pow(a + b, 4, 1), frobenius_pow(a, 4, 1) + frobenius_pow(b, 4, 1));
  }
  // on kappa[D] the twist also sends D to D^q
  const auto kappa = S.p.residue_field();
  const FieldPoly f = parse_field_poly(kappa, "a*s^2 + s + x");
  const FieldPoly g = parse_field_poly(kappa, "s^3 + (a + x)");
  EXPECT_EQ(frobenius_pow(f, 4, 1), parse_field_poly(kappa, "a^4*s^8 + s^4 + x^4"));
  EXPECT_EQ(frobenius_pow(f * g, 4, 2), frobenius_pow(f, 4, 2) * frobenius_pow(g, 4, 2));
}

TEST(Ore, MultiplicationIsAssociativeAndDistributive) {
  std::mt19937 rng(99);
  for (unsigned q : {2u, 3u}) {
    const auto S = make_setup(q, q == 2 ? "T^2+T+1" : "T^2+1");
    for (int i = 0; i < 40; ++i) {
      const auto f = random_ore(q, S.F, rng), g = random_ore(q, S.F, rng), h = random_ore(q, S.F, rng);
      ASSERT_EQ((f * g) * h, f * (g * h));
      ASSERT_EQ(f * (g + h), f * g + f * h);
      ASSERT_EQ(f * g - f * g, OrePoly<FieldElement>(q, {}, S.zero));
      // evaluation turns products into composition
      const auto x = random_element(S.F, rng);
      ASSERT_EQ(ore_apply(f * g, x), ore_apply(f, ore_apply(g, x)));
    }
  }
}

TEST(Ore, ApplyExamples) {
  const auto S = make_setup(2, "T^2+T+1");
  const OrePoly<FieldElement> t_minus_1(2, {-S.one, S.one}, S.zero);
  for (FieldElement::Code c = 0; c < S.F->cardinality(); ++c) {
    const FieldElement x(S.F, c);
    EXPECT_EQ(ore_apply(t_minus_1, x), x.pow(2) - x);
    // psi_T(1) = 0 for every Delta
    if (!x.is_zero()) EXPECT_TRUE(ore_apply(DeltaModule(2, S.gamma, x).psi_T(), S.one).is_zero());
  }
}

TEST(Ore, LambdaIsTorsion) {
  for (unsigned q : {2u, 3u, 4u}) {
    const auto fq = ConstantField::make(q);
    const auto p = enumerate_primes(fq, 2).back();
    const auto F = FiniteField::extension(p.residue_field(), 2, "b");
    const auto gamma = p.alpha().embed(F);
    for (FieldElement::Code c = 0; c < F->cardinality(); ++c) {
      const FieldElement lambda(F, c);
      if (lambda.pow(q) == lambda) continue;
      const LambdaModule m(q, gamma, lambda);
      EXPECT_TRUE(ore_apply(m.psi_T(), lambda).is_zero());
      EXPECT_TRUE(ore_apply(m.psi_T(), one_like(lambda)).is_zero());
    }
  }
}

TEST(Ore, DrinfeldImageExamples) {
  const auto S = make_setup(3, "T^2+1");
  const FieldElement delta = FieldElement::generator(S.F);
  const auto psi = DeltaModule(3, S.gamma, delta).psi_T();
  EXPECT_EQ(drinfeld_image(psi, S.fq.T()), psi);
  const auto psi2 = drinfeld_image(psi, S.fq.t_power(2));
  EXPECT_EQ(psi2[0], S.gamma * S.gamma);
  EXPECT_EQ(psi2.degree(), 4);
  EXPECT_EQ(drinfeld_image(psi, S.fq.constant(S.fq.from_int(2))), OrePoly<FieldElement>::constant(3, S.one + S.one));
}

TEST(Ore, DrinfeldImageIsAHomomorphism) {
  std::mt19937 rng(31337);
  const auto S = make_setup(3, "T^2+1");
  const auto psi = DeltaModule(3, S.gamma, FieldElement::generator(S.F) + S.one).psi_T();
  for (int i = 0; i < 20; ++i) {
    const TPoly a = random_tpoly(S.fq, rng), b = random_tpoly(S.fq, rng);
    ASSERT_EQ(drinfeld_image(psi, a * b), drinfeld_image(psi, a) * drinfeld_image(psi, b));
    ASSERT_EQ(drinfeld_image(psi, a + b), drinfeld_image(psi, a) + drinfeld_image(psi, b));
    // truncation keeps the low coefficients
    const auto full = drinfeld_image(psi, a * b);
    const auto low = drinfeld_image(psi, a * b, 2);
    for (std::size_t k = 0; k <= 2; ++k) ASSERT_EQ(low[k], full[k]);
  }
}

TEST(Ore, TopCoefficientOfPsiP) {
  for (unsigned q : {2u, 3u}) {
    const auto fq = ConstantField::make(q);
    for (const auto& p : enumerate_primes(fq, 2)) {
      const auto img = drinfeld_image(symbolic_psi_T(p), p.poly());
      const unsigned d = p.degree();
      ASSERT_EQ(img.degree(), static_cast<int>(2 * d));
      std::uint64_t e = 0, qq = 1;
      for (unsigned i = 0; i < d; ++i, qq *= q * q) e += qq;
      const FieldPoly D = FieldPoly::x(FieldElement::zero(p.residue_field()));
      EXPECT_EQ(img[2 * d], power(D, e)) << p.to_string();
      // gamma is p(alpha) = 0 at the bottom
      EXPECT_TRUE(img[0].is_zero());
    }
  }
}

TEST(Ore, Errors) {
  const auto S = make_setup(2, "T^2+T+1");
  EXPECT_THROW(OrePoly<FieldElement>(1, {S.one}, S.zero), DomainError);
  const auto a = OrePoly<FieldElement>::tau(2, S.zero);
  const auto b = OrePoly<FieldElement>::tau(4, S.zero);
  EXPECT_THROW(a + b, ContextMismatch);
  EXPECT_THROW(a * b, ContextMismatch);
  EXPECT_EQ(to_string(OrePoly<FieldElement>(2, {S.one, S.zero, S.one}, S.zero)), "t^2 + 1");
}
