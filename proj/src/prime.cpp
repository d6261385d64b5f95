#include "deuring/prime.hpp"

#include "deuring/errors.hpp"
#include "deuring/expr.hpp"

namespace deuring {

PrimeModulus PrimeModulus::make(const ConstantField& fq, const TPoly& p) {
  const TPoly pp(p.coeffs(), fq.zero());
  if (pp.degree() < 1) throw InvalidPrime("p(T) must have positive degree");
  if (!pp.is_monic()) throw InvalidPrime("p(T) must be monic");
  if (pp == fq.T()) throw InvalidPrime("p(T) = T is excluded: the characteristic must differ from <T>");
  if (!is_irreducible(pp)) throw InvalidPrime("p(T) = " + to_string_T(pp) + " is reducible over F_" + std::to_string(fq.q));
  std::vector<FieldElement::Code> codes;
  for (const auto& c : pp.coeffs()) codes.push_back(c.code());
  PrimeModulus m;
  m.fq_ = fq;
  m.p_ = pp;
  m.kappa_ = FiniteField::extend(fq.field, codes, "a");
  m.alpha_ = FieldElement::generator(m.kappa_);
  return m;
}

PrimeModulus PrimeModulus::parse(const ConstantField& fq, std::string_view text) {
  TPoly p;
  try {
    p = parse_tpoly(fq, text);
  } catch (const ParseError& e) {
    throw InvalidPrime(std::string("cannot parse prime: ") + e.what());
  }
  return make(fq, p);
}

FieldElement PrimeModulus::reduce(const TPoly& f) const { return evaluate(f, alpha_); }

FieldElement PrimeModulus::reduce(const Laurent& f) const {
  FieldElement v = reduce(f.numerator());
  if (f.shift() >= 0) return v * alpha_.pow(static_cast<std::uint64_t>(f.shift()));
  return v * alpha_.inverse().pow(static_cast<std::uint64_t>(-f.shift()));
}

Poly<FieldElement> reduce_mod_prime(const Poly<TPoly>& f, const PrimeModulus& p) {
  return map_coeffs(f, [&](const TPoly& c) { return p.reduce(c); }, FieldElement::zero(p.residue_field()));
}

Poly<FieldElement> reduce_mod_prime(const Poly<Laurent>& f, const PrimeModulus& p) {
  return map_coeffs(f, [&](const Laurent& c) { return p.reduce(c); }, FieldElement::zero(p.residue_field()));
}

std::vector<PrimeModulus> enumerate_primes(const ConstantField& fq, unsigned max_degree) {
  std::vector<PrimeModulus> out;
  const std::uint64_t q = fq.q;
  for (unsigned d = 1; d <= max_degree; ++d) {
    std::uint64_t count = checked_pow(q, d);
    for (std::uint64_t n = 0; n < count; ++n) {
      std::vector<FieldElement> c;
      std::uint64_t rest = n;
      for (unsigned i = 0; i < d; ++i) {
        c.emplace_back(fq.field, rest % q);
        rest /= q;
      }
      c.push_back(fq.one());
      TPoly p(std::move(c), fq.zero());
      if (p == fq.T() || !is_irreducible(p)) continue;
      out.push_back(PrimeModulus::make(fq, p));
    }
  }
  return out;
}

}  // namespace deuring
