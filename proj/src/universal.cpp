#include "deuring/universal.hpp"

namespace deuring {

UniversalSequence<TPoly> u_sequence(const ConstantField& fq, unsigned i_max) {
  const std::uint64_t q = fq.q;
  const TPoly zero(fq.zero());
  const APoly s = APoly::x(zero);
  const APoly base = s + APoly::constant(fq.t_power(q));

  UniversalSequence<TPoly> u{'u', q, {APoly(zero), APoly::constant(one_like(zero))}};
  for (unsigned i = 0; i < i_max; ++i) {
    const APoly c = APoly::constant(fq.t_power(checked_pow(q, i)) - fq.T());
    APoly next = frobenius_pow(base, q, i) * u.at(static_cast<int>(i));
    if (!c.is_zero()) next -= c * frobenius_pow(s, q, i) * u.at(static_cast<int>(i) - 1);
    u.terms.push_back(std::move(next));
  }
  return u;
}

UniversalSequence<Laurent> U_sequence(const ConstantField& fq, unsigned i_max) {
  using LPoly = Poly<Laurent>;
  const std::uint64_t q = fq.q;
  const Laurent zero{TPoly(fq.zero())};
  const LPoly s = LPoly::x(zero);
  const LPoly D = power(power(s, q) - s, q - 1);
  const LPoly base = D + LPoly::constant(Laurent::t_power(fq, -static_cast<long long>(q - 1)));

  UniversalSequence<Laurent> U{'U', q, {LPoly(zero), LPoly::constant(one_like(zero))}};
  for (unsigned i = 0; i < i_max; ++i) {
    LPoly next = frobenius_pow(base, q, i) * U.at(static_cast<int>(i));
    // The second term carries the factor T^(q^0) - T = 0 at i = 0.
    if (i > 0) {
      const Laurent c = Laurent(fq.t_power(checked_pow(q, i)) - fq.T()) *
                        Laurent::t_power(fq, -static_cast<long long>(checked_pow(q, i + 1)));
      next -= c * frobenius_pow(D, q, i - 1) * U.at(static_cast<int>(i) - 1);
    }
    U.terms.push_back(std::move(next));
  }
  return U;
}

MultiPoly to_multipoly(const Poly<TPoly>& f) {
  MultiPoly out(f.zero().zero());
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    const TPoly& c = f.coeffs()[j];
    for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
      if (c.coeffs()[i].is_zero()) continue;
      Exponents e{};
      e[static_cast<std::size_t>(Var::T)] = static_cast<std::int32_t>(i);
      e[static_cast<std::size_t>(Var::s)] = static_cast<std::int32_t>(j);
      out += MultiPoly::term(c.coeffs()[i], e);
    }
  }
  return out;
}

bool check_key_identity(const ConstantField& fq, unsigned i) {
  const std::uint64_t q = fq.q;
  const auto u = u_sequence(fq, i);
  const FieldElement zero = fq.zero();
  const MultiPoly T = MultiPoly::variable(zero, Var::T);
  const MultiPoly s = MultiPoly::variable(zero, Var::s);
  const MultiPoly one = MultiPoly::constant(fq.one());
  const MultiPoly s1 = s + one;

  const MultiPoly ui = to_multipoly(u.at(static_cast<int>(i)));
  const MultiPoly uprev = to_multipoly(u.at(static_cast<int>(i) - 1));
  const auto Ni = static_cast<std::uint64_t>(u.at(static_cast<int>(i)).degree());
  const auto Nprev = u.at(static_cast<int>(i) - 1).is_zero() ? 0 : static_cast<std::uint64_t>(u.at(static_cast<int>(i) - 1).degree());

  const MultiPoly D0 = -(power(T, q) * s * power(s1, q - 1));
  const MultiPoly num = -(T * power(s, q));
  const MultiPoly den = power(s1, q - 1);
  const MultiPoly E = power(den, Ni);

  const MultiPoly at_D0 = E * substitute(ui, Var::s, D0);
  const MultiPoly ui_D1 = substitute_cleared(ui, Var::s, num, den);
  const MultiPoly uprev_D1 = substitute_cleared(uprev, Var::s, num, den) * power(den, Ni - Nprev);
  const MultiPoly W = power(T * s1, checked_pow(q, i) - 1);
  const MultiPoly c = power(T, checked_pow(q, i)) - T;

  const MultiPoly lhs = at_D0 - W * ui_D1;
  const MultiPoly rhs = -(c * W * uprev_D1);
  return lhs == rhs;
}

bool check_simple_roots(const PrimeModulus& p) {
  const auto u = u_sequence(p.constants(), p.degree());
  const FieldPoly h = reduce_mod_prime(u.at(static_cast<int>(p.degree())), p);
  if (h.is_zero() || h[0].is_zero()) return false;
  return poly_gcd(h, derivative(h)).degree() == 0;
}

bool check_constant_terms(const UniversalSequence<TPoly>& u) {
  const TPoly zero = u.at(0).zero();
  for (int i = 0; i <= u.max_index(); ++i) {
    const auto e = u.q * ((checked_pow(u.q, static_cast<unsigned>(i)) - 1) / (u.q - 1));
    if (u.at(i)[0] != TPoly::monomial(one_like(zero.zero()), e)) return false;
  }
  return true;
}

bool check_degrees(const UniversalSequence<TPoly>& u) {
  for (int i = 0; i <= u.max_index(); ++i) {
    const auto N = deuring_degree(u.q, static_cast<unsigned>(i));
    if (u.at(i).degree() != static_cast<int>(N) || !u.at(i).is_monic()) return false;
  }
  return true;
}

DerivativeReport check_derivative_recursion(const ConstantField& fq, unsigned i_max) {
  const std::uint64_t q = fq.q;
  const auto u = u_sequence(fq, i_max + 1);
  const TPoly zero(fq.zero());
  const APoly s = APoly::x(zero);
  const APoly base = s + APoly::constant(fq.t_power(q));

  std::vector<APoly> du;  // du[i + 1] = u_i'
  for (int i = -1; i <= u.max_index(); ++i) du.push_back(derivative(u.at(i)));
  auto d = [&](int i) -> const APoly& { return du[static_cast<std::size_t>(i + 1)]; };

  DerivativeReport report;
  for (unsigned k = 0; k <= i_max; ++k) {
    const int i = static_cast<int>(k);
    const APoly A = frobenius_pow(base, q, k);
    const APoly B = frobenius_pow(s, q, k);
    const APoly c = APoly::constant(fq.t_power(checked_pow(q, k)) - fq.T());
    const APoly product = derivative(A) * u.at(i) + A * d(i) - c * (derivative(B) * u.at(i - 1) + B * d(i - 1));
    if (product != d(i + 1)) report.product_rule = false;
    if (k >= 1 && A * d(i) - c * B * d(i - 1) != d(i + 1)) report.same_recursion = false;
  }
  return report;
}

DeuringResult deuring_universal(const PrimeModulus& p) {
  const auto u = u_sequence(p.constants(), p.degree());
  const auto U = U_sequence(p.constants(), p.degree());
  const int d = static_cast<int>(p.degree());
  return {p, Method::Universal, reduce_mod_prime(u.at(d), p), reduce_mod_prime(U.at(d), p)};
}

namespace {

template <class R, class Fn>
nlohmann::json sequence_json(const UniversalSequence<R>& seq, Fn&& render) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& f : seq.terms) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(render(c));
    terms.push_back(std::move(coeffs));
  }
  return {{"variant", std::string(1, seq.variant)}, {"q", seq.q}, {"first_index", -1}, {"terms", std::move(terms)}};
}

}  // namespace

nlohmann::json to_json(const UniversalSequence<TPoly>& u) { return sequence_json(u, to_string_T); }

nlohmann::json to_json(const UniversalSequence<Laurent>& U) {
  return sequence_json(U, [](const Laurent& c) { return c.to_string(); });
}

}  // namespace deuring
