#include "deuring/tower.hpp"

#include "deuring/ore.hpp"

namespace deuring {

namespace {

struct Ring {
  explicit Ring(const ConstantField& fq) : q(fq.q), zero(fq.zero()) {
    one = MultiPoly::constant(fq.one());
    T = var(Var::T);
    D0 = var(Var::D0);
    D1 = var(Var::D1);
    Y = var(Var::Y);
    Y1 = var(Var::Y1);
    theta = var(Var::theta);
    s = var(Var::s);
    c = var(Var::c);
  }
  MultiPoly var(Var v) const { return MultiPoly::variable(zero, v); }
  MultiPoly T_pow(std::uint64_t e) const { return power(T, e); }

  std::uint64_t q;
  FieldElement zero;
  MultiPoly one, T, D0, D1, Y, Y1, theta, s, c;
};

/// (D0+T^q)^(q+1) D1 - (D1+T)^(q+1) D0^q
MultiPoly modular_relation(const Ring& R) {
  const auto q = R.q;
  return power(R.D0 + R.T_pow(q), q + 1) * R.D1 - power(R.D1 + R.T, q + 1) * power(R.D0, q);
}

/// 1 + T^(q^2)/D0^q - (D1 - T^(q+1)/D0)^(q-1) (D1/D0 + T/D0)
MultiPoly second_factor(const Ring& R) {
  const auto q = R.q;
  const MultiPoly inv_D0 = R.D0.unit_inverse();
  return R.one + R.T_pow(q * q) * power(inv_D0, q) -
         power(R.D1 - R.T_pow(q + 1) * inv_D0, q - 1) * (R.D1 * inv_D0 + R.T * inv_D0);
}

/// D0 and D1 along the Y-parametrization: D0 = -T^q (Y+1)^(q-1) Y, D1 = num/den.
struct YForm {
  MultiPoly D0, num, den;
};

YForm y_form(const Ring& R) {
  const auto q = R.q;
  return {-(R.T_pow(q) * power(R.Y + R.one, q - 1) * R.Y), -(R.T * power(R.Y, q)), power(R.Y + R.one, q - 1)};
}

void expect(IdentityReport& r, bool ok, const std::string& what) {
  if (!ok) r.failures.push_back(what);
}

IdentityReport start(const std::string& name, std::uint64_t q) {
  IdentityReport r;
  r.name = name;
  r.q = q;
  return r;
}

void finish(IdentityReport& r) { r.verified = r.failures.empty(); }

}  // namespace

IdentityReport verify_factorization(const ConstantField& fq) {
  const Ring R(fq);
  const auto q = R.q;
  IdentityReport r = start("factorization", q);

  const MultiPoly lhs = modular_relation(R);
  const MultiPoly first = R.D0 - R.T_pow(q + 1) * R.D1.unit_inverse();
  const MultiPoly rhs = first * second_factor(R) * power(R.D0, q) * R.D1;
  r.lhs_terms = lhs.term_count();
  r.rhs_terms = rhs.term_count();
  expect(r, rhs.is_polynomial(), "clearing by D0^q*D1 leaves a denominator");
  expect(r, lhs == rhs, "product form differs from the modular relation");
  // D1 = T^(q+1)/D0 is the dual isogeny.
  expect(r, substitute_cleared(lhs, Var::D1, R.T_pow(q + 1), R.D0).is_zero(), "dual-isogeny factor does not vanish");
  finish(r);
  return r;
}

IdentityReport verify_theta_parametrization(const ConstantField& fq) {
  const Ring R(fq);
  const auto q = R.q;
  IdentityReport r = start("theta_parametrization", q);

  const MultiPoly F = second_factor(R) * power(R.D0, q);
  expect(r, F.is_polynomial(), "clearing the second factor by D0^q leaves a denominator");
  r.lhs_terms = F.term_count();

  const MultiPoly th_T = R.theta + R.T;
  const MultiPoly D0_th = power(R.theta, q - 1) * th_T;
  const MultiPoly D1_th = power(th_T, q) * power(R.theta.unit_inverse(), q - 1);
  const MultiPoly on_theta = substitute(substitute(F, Var::D0, D0_th), Var::D1, D1_th);
  r.rhs_terms = on_theta.term_count();
  expect(r, on_theta.is_zero(), "theta-form does not satisfy the second factor");
  // theta is recovered as (D0 D1 - T^(q+1))/(D0 + T^q).
  expect(r, D0_th * D1_th - R.T_pow(q + 1) == R.theta * (D0_th + R.T_pow(q)), "theta is not (D0 D1 - T^(q+1))/(D0 + T^q)");

  const YForm y = y_form(R);
  const MultiPoly on_Y = substitute_cleared(substitute(F, Var::D0, y.D0), Var::D1, y.num, y.den);
  expect(r, on_Y.is_zero(), "Y-form does not satisfy the second factor");

  // Y = -(theta+T)/T; then Y + 1 = -theta/T is a unit.
  const MultiPoly Yv = -(th_T * R.T.unit_inverse());
  const MultiPoly Yv1 = Yv + R.one;
  expect(r, substitute(y.D0, Var::Y, Yv) == D0_th, "Y-form D0 differs from theta-form");
  const MultiPoly D1_from_Y = -(R.T * power(Yv, q) * power(Yv1.unit_inverse(), q - 1));
  expect(r, D1_from_Y == D1_th, "Y-form D1 differs from theta-form");
  finish(r);
  return r;
}

IdentityReport verify_recursion_step(const ConstantField& fq) {
  const Ring R(fq);
  const auto q = R.q;
  IdentityReport r = start("recursion_step", q);

  const MultiPoly Yp1 = power(R.Y + R.one, q - 1);
  const MultiPoly lhs_eq = -(R.T_pow(q) * power(R.Y1 + R.one, q - 1) * R.Y1);
  // (lhs - rhs) cleared by (Y+1)^(q-1), rhs = -T Y^q/(Y+1)^(q-1).
  const MultiPoly A = lhs_eq * Yp1 + R.T * power(R.Y, q);
  const MultiPoly B = power(R.Y1 + R.one, q - 1) * R.Y1 * R.T_pow(q - 1) * Yp1 - power(R.Y, q);
  r.lhs_terms = A.term_count();
  r.rhs_terms = B.term_count();
  expect(r, A == -(R.T * B), "cleared relation is not -T times the simplified one");
  finish(r);
  return r;
}

IdentityReport j_chain_check(const ConstantField& fq) {
  const Ring R(fq);
  const auto q = R.q;
  IdentityReport r = start("j_chain", q);

  const MultiPoly S = modular_relation(R);
  const YForm y = y_form(R);
  const MultiPoly on_Y = substitute_cleared(substitute(S, Var::D0, y.D0), Var::D1, y.num, y.den);
  r.lhs_terms = S.term_count();
  r.rhs_terms = on_Y.term_count();
  expect(r, on_Y.is_zero(), "modular relation fails on the Y-parametrization");

  // psi_T = (D0 t - T)(t - 1) and the isogenous psi'_T = (t - 1)(D0 t - T).
  const OrePoly<MultiPoly> a(q, {-R.T, R.D0}, MultiPoly(R.zero));
  const OrePoly<MultiPoly> b(q, {-R.one, R.one}, MultiPoly(R.zero));
  const OrePoly<MultiPoly> psi = a * b;
  const OrePoly<MultiPoly> psi2 = b * a;
  expect(r, psi == OrePoly<MultiPoly>(q, {R.T, -(R.D0 + R.T), R.D0}, MultiPoly(R.zero)), "psi_T is not in Legendre form");
  expect(r, psi2 == OrePoly<MultiPoly>(q, {R.T, -(R.D0 + R.T_pow(q)), power(R.D0, q)}, MultiPoly(R.zero)),
         "isogenous module has unexpected coefficients");
  // j = g^(q+1)/D for g t + D t^2.
  expect(r, power(-psi2[1], q + 1) == power(R.D0 + R.T_pow(q), q + 1), "j of the isogenous module differs");

  // Lambda form: D = (s^q - s)^(q-1), Delta = T/D.
  const MultiPoly D = power(power(R.s, q) - R.s, q - 1);
  const MultiPoly X = substitute_cleared(power(R.D0 + R.T, q + 1), Var::D0, R.T, D);
  expect(r, X == R.T_pow(q + 1) * power(R.one + D, q + 1), "lambda- and Delta-forms of j disagree");

  const MultiPoly N = R.T_pow(q) * power(R.one + D, q + 1) - R.c * power(D, q);
  r.j_map_degree = N.degree_in(Var::s);
  expect(r, r.j_map_degree == static_cast<int>(q * q * q - q), "j-map degree is not q^3 - q");
  finish(r);
  return r;
}

std::vector<IdentityReport> verify_tower(const ConstantField& fq) {
  return {verify_factorization(fq), verify_theta_parametrization(fq), verify_recursion_step(fq), j_chain_check(fq)};
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j{{"name", r.name},
                   {"q", r.q},
                   {"verified", r.verified},
                   {"lhs_terms", r.lhs_terms},
                   {"rhs_terms", r.rhs_terms},
                   {"failures", r.failures}};
  if (r.name == "j_chain") j["j_map_degree"] = r.j_map_degree;
  return j;
}

}  // namespace deuring
