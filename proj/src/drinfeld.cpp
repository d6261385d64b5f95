#include "deuring/drinfeld.hpp"

#include <algorithm>

#include "deuring/errors.hpp"

namespace deuring {

DeltaModule::DeltaModule(std::uint64_t q, FieldElement gamma, FieldElement delta)
    : q_(q), gamma_(std::move(gamma)), delta_(std::move(delta)) {
  if (gamma_.is_zero()) throw DomainError("gamma(T) must be nonzero");
  if (delta_.is_zero()) throw DomainError("Delta must be nonzero for a rank-2 module");
}

LambdaModule::LambdaModule(std::uint64_t q, FieldElement gamma, FieldElement lambda)
    : q_(q), gamma_(std::move(gamma)), lambda_(std::move(lambda)) {
  if (gamma_.is_zero()) throw DomainError("gamma(T) must be nonzero");
  if (frobenius(lambda_, q_, 1) == lambda_) throw DegenerateLambda();
}

OrePoly<FieldElement> LambdaModule::psi_T() const { return delta_from_lambda(*this).psi_T(); }

DeltaModule delta_from_lambda(const LambdaModule& m) {
  const FieldElement L = frobenius(m.lambda(), m.q(), 1) - m.lambda();
  return DeltaModule(m.q(), m.gamma(), m.gamma() / L.pow(m.q() - 1));
}

FieldElement j_invariant(const DeltaModule& m) {
  return (m.delta() + m.gamma()).pow(m.q() + 1) / m.delta();
}

FieldElement j_invariant(const LambdaModule& m) {
  const std::uint64_t q = m.q();
  const FieldElement L = frobenius(m.lambda(), q, 1) - m.lambda();
  const FieldElement one = one_like(L);
  return m.gamma().pow(q) * (one + L.pow(q - 1)).pow(q + 1) / L.pow(q * q - q);
}

bool is_supersingular(const DeltaModule& m, const PrimeModulus& p) {
  if (m.q() != p.q()) throw ContextMismatch("module and prime use different q");
  if (!evaluate(p.poly(), m.gamma()).is_zero())
    throw CharacteristicMismatch("gamma does not kill p(T) = " + p.to_string());
  const auto image = drinfeld_image(m.psi_T(), p.poly());
  return image[p.degree()].is_zero();
}

bool is_supersingular(const LambdaModule& m, const PrimeModulus& p) {
  return is_supersingular(delta_from_lambda(m), p);
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Direct:
      return "direct";
    case Method::GRecurrence:
      return "grec";
    case Method::Universal:
      return "universal";
  }
  return "unknown";
}

Method method_from_name(const std::string& name) {
  if (name == "direct") return Method::Direct;
  if (name == "grec") return Method::GRecurrence;
  if (name == "universal") return Method::Universal;
  throw DomainError("unknown method '" + name + "'");
}

namespace {

nlohmann::json coeff_list(const FieldPoly& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.to_string());
  return out;
}

}  // namespace

nlohmann::json to_json(const DeuringResult& r) {
  return {{"q", r.prime.q()},
          {"p", r.prime.to_string()},
          {"d", r.prime.degree()},
          {"method", method_name(r.method)},
          {"h_coeffs", coeff_list(r.h)},
          {"H_coeffs", coeff_list(r.H)}};
}

std::uint64_t deuring_degree(std::uint64_t q, unsigned d) { return (checked_pow(q, d) - 1) / (q - 1); }

OrePoly<FieldPoly> symbolic_psi_T(const PrimeModulus& p) {
  const FieldPoly zero(FieldElement::zero(p.residue_field()));
  const FieldPoly delta = FieldPoly::x(zero.zero());
  return legendre_psi(p.q(), delta, FieldPoly::constant(p.alpha()));
}

OrePoly<APoly> generic_psi_T(const ConstantField& fq) {
  const TPoly zero(fq.zero());
  return legendre_psi(fq.q, APoly::x(zero), APoly::constant(fq.T()));
}

std::vector<FieldPoly> g_coefficients_direct(const PrimeModulus& p) {
  const auto image = drinfeld_image(symbolic_psi_T(p), p.poly());
  std::vector<FieldPoly> g;
  for (unsigned k = 0; k <= 2 * p.degree(); ++k) g.push_back(image[k]);
  return g;
}

namespace {

/// Right-hand side of the recurrence:
/// g1 W^(q^(k-1)) - g1^q W - (g2 D^(q^(k-2)) - g2^(q^2) D), with W = D + gamma.
template <class R>
Poly<R> recurrence_rhs(std::uint64_t q, unsigned k, const Poly<R>& g2, const Poly<R>& g1, const Poly<R>& delta,
                       const Poly<R>& omega) {
  return g1 * frobenius_pow(omega, q, k - 1) - frobenius_pow(g1, q, 1) * omega -
         (g2 * frobenius_pow(delta, q, k - 2) - frobenius_pow(g2, q, 2) * delta);
}

}  // namespace

std::vector<FieldPoly> g_recurrence_residue(const PrimeModulus& p, const FieldPoly& g_prev2, const FieldPoly& g_prev1,
                                            unsigned k0, unsigned k1) {
  if (k0 < 2) throw DomainError("the recurrence needs two seeds");
  const std::uint64_t q = p.q();
  const FieldPoly zero(FieldElement::zero(p.residue_field()));
  const FieldPoly delta = FieldPoly::x(zero.zero());
  const FieldPoly omega = delta + FieldPoly::constant(p.alpha());
  std::vector<FieldPoly> out;
  FieldPoly g2 = g_prev2, g1 = g_prev1;
  for (unsigned k = k0; k <= k1; ++k) {
    const FieldElement divisor = frobenius(p.alpha(), q, k) - p.alpha();
    if (divisor.is_zero()) throw RecurrenceBreakdown(k);
    FieldPoly gk = divisor.inverse() * recurrence_rhs(q, k, g2, g1, delta, omega);
    out.push_back(gk);
    g2 = std::move(g1);
    g1 = std::move(gk);
  }
  return out;
}

std::vector<FieldPoly> g_coefficients_grec(const PrimeModulus& p, unsigned k_max) {
  const ConstantField& fq = p.constants();
  const std::uint64_t q = fq.q;
  const unsigned d = p.degree();

  // Seeds from the image truncated to t-degree <= 1.
  const auto psi = generic_psi_T(fq);
  const auto seed = drinfeld_image(psi, p.poly(), 1);
  std::vector<APoly> g{seed[0], seed[1]};

  const APoly delta = APoly::x(TPoly(fq.zero()));
  const APoly omega = delta + APoly::constant(fq.T());
  for (unsigned k = 2; k <= std::min(k_max, d); ++k) {
    const APoly rhs = recurrence_rhs(q, k, g[k - 2], g[k - 1], delta, omega);
    const TPoly divisor = fq.t_power(checked_pow(q, k)) - fq.T();
    std::vector<TPoly> c;
    for (const auto& x : rhs.coeffs()) c.push_back(exact_div(x, divisor));
    g.emplace_back(std::move(c), delta.zero());
  }

  std::vector<FieldPoly> out;
  for (unsigned k = 0; k < g.size() && k <= k_max; ++k) out.push_back(reduce_mod_prime(g[k], p));
  if (k_max > d) {
    const auto more = g_recurrence_residue(p, out[d - 1], out[d], d + 1, k_max);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

FieldPoly h_from_g(const PrimeModulus& p, const FieldPoly& g_d) {
  const FieldPoly h = p.degree() % 2 ? -g_d : g_d;
  const auto N = deuring_degree(p.q(), p.degree());
  if (h.degree() != static_cast<int>(N) || !h.is_monic())
    throw InternalConsistency("(-1)^d g_d is not monic of degree " + std::to_string(N));
  return h;
}

DeuringResult deuring_h_direct(const PrimeModulus& p) {
  const auto g = g_coefficients_direct(p);
  FieldPoly h = h_from_g(p, g[p.degree()]);
  FieldPoly H = deuring_H(p, h);
  return {p, Method::Direct, std::move(h), std::move(H)};
}

DeuringResult deuring_h_grec(const PrimeModulus& p) {
  const auto g = g_coefficients_grec(p, p.degree());
  FieldPoly h = h_from_g(p, g[p.degree()]);
  FieldPoly H = deuring_H(p, h);
  return {p, Method::GRecurrence, std::move(h), std::move(H)};
}

FieldPoly deuring_H(const PrimeModulus& p, const FieldPoly& h) {
  const std::uint64_t q = p.q();
  const auto N = deuring_degree(q, p.degree());
  if (h.degree() != static_cast<int>(N) || !h.is_monic())
    throw DomainError("h must be monic of degree " + std::to_string(N));
  const FieldElement zero = FieldElement::zero(p.residue_field());
  const FieldElement alpha = p.alpha();
  const FieldPoly s = FieldPoly::x(zero);
  const FieldPoly D = power(power(s, q) - s, q - 1);

  // sum_j h_j alpha^j D^(N-j), then divide by alpha^(qN).
  std::vector<FieldPoly> Dpow{FieldPoly::constant(one_like(zero))};
  for (std::uint64_t i = 1; i <= N; ++i) Dpow.push_back(Dpow.back() * D);
  FieldPoly acc(zero);
  FieldElement apow = one_like(zero);
  for (std::uint64_t j = 0; j <= N; ++j) {
    const FieldElement c = h[j] * apow;
    if (!c.is_zero()) acc += c * Dpow[N - j];
    apow *= alpha;
  }
  FieldPoly H = alpha.pow(q * N).inverse() * acc;
  const auto expected = checked_pow(q, p.degree() + 1) - q;
  if (H.degree() != static_cast<int>(expected) || !H.is_monic())
    throw InternalConsistency("H is not monic of degree " + std::to_string(expected) + "; h is corrupt");
  return H;
}

}  // namespace deuring
