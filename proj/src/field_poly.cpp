#include "deuring/field_poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "deuring/errors.hpp"

namespace deuring {

namespace {

using Code = FieldElement::Code;

std::vector<Code> codes_of(const FieldPoly& f) {
  std::vector<Code> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(c.code());
  return v;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Code eval_code(const FiniteField& F, const std::vector<Code>& f, Code x) {
  Code acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

// Splits a monic squarefree product of distinct linear factors into its roots.
void split_linear(const FieldPoly& g, std::mt19937_64& rng, std::vector<FieldElement>& out) {
  const FieldPtr& F = coefficient_field(g);
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-(g[0] / g[1]));
    return;
  }
  const FieldPoly x = FieldPoly::x(FieldElement::zero(F));
  std::uniform_int_distribution<Code> pick(0, F->cardinality() - 1);
  for (;;) {
    const FieldElement delta(F, pick(rng));
    FieldPoly h(FieldElement::zero(F));
    if (F->characteristic() == 2) {
      FieldPoly t = (delta * x) % g;
      h = t;
      for (unsigned i = 1; i < F->total_degree(); ++i) {
        t = (t * t) % g;
        h += t;
      }
    } else {
      h = powmod(x + FieldPoly::constant(delta), (F->cardinality() - 1) / 2, g) -
          FieldPoly::constant(FieldElement::one(F));
    }
    if (h.is_zero()) continue;
    const FieldPoly d = poly_gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(exact_div(g, d), rng, out);
      return;
    }
  }
}

}  // namespace

FieldPoly poly_from_codes(const FieldPtr& field, const std::vector<Code>& codes) {
  std::vector<FieldElement> v;
  v.reserve(codes.size());
  for (Code c : codes) v.emplace_back(field, c);
  return FieldPoly(std::move(v), FieldElement::zero(field));
}

std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& f, const FieldPoly& g) {
  if (g.is_zero()) throw DivisionByZero();
  const FieldPtr F = common_field(coefficient_field(f), coefficient_field(g));
  const FiniteField& K = *F;
  if (f.degree() < g.degree()) return {FieldPoly(FieldElement::zero(F)), FieldPoly(f.coeffs(), FieldElement::zero(F))};
  std::vector<Code> r = codes_of(f);
  const std::vector<Code> gc = codes_of(g);
  const std::size_t dg = gc.size() - 1;
  std::vector<Code> quo(r.size() - dg, 0);
  const Code lc_inv = K.inv(gc.back());
  for (std::size_t i = r.size(); i-- > dg;) {
    const Code c = r[i];
    if (!c) continue;
    const Code t = K.mul(c, lc_inv);
    quo[i - dg] = t;
    for (std::size_t j = 0; j <= dg; ++j)
      if (gc[j]) r[i - dg + j] = K.sub(r[i - dg + j], K.mul(t, gc[j]));
  }
  r.resize(dg);
  return {poly_from_codes(F, quo), poly_from_codes(F, r)};
}

FieldPoly operator%(const FieldPoly& f, const FieldPoly& g) { return divmod(f, g).second; }

FieldPoly exact_div(const FieldPoly& f, const FieldPoly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw InexactDivision("polynomial division leaves a remainder");
  return q;
}

bool divides(const FieldPoly& g, const FieldPoly& f) { return (f % g).is_zero(); }

FieldPoly monic(const FieldPoly& f) {
  if (f.is_zero()) return f;
  return f.leading().inverse() * f;
}

FieldPoly poly_gcd(const FieldPoly& f, const FieldPoly& g) {
  if (f.is_zero() && g.is_zero()) throw UndefinedGcd();
  FieldPoly a = f, b = g;
  while (!b.is_zero()) {
    FieldPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

FieldPoly powmod(FieldPoly base, std::uint64_t e, const FieldPoly& mod) {
  FieldPoly acc = FieldPoly::constant(FieldElement::one(coefficient_field(mod))) % mod;
  base = base % mod;
  while (e) {
    if (e & 1ULL) acc = (acc * base) % mod;
    e >>= 1;
    if (e) base = (base * base) % mod;
  }
  return acc;
}

FieldPoly x_frobenius_mod(const FieldPoly& f, unsigned times) {
  const FieldPtr& F = coefficient_field(f);
  FieldPoly h = FieldPoly::x(FieldElement::zero(F)) % f;
  for (unsigned i = 0; i < times; ++i) h = powmod(h, F->cardinality(), f);
  return h;
}

bool is_irreducible(const FieldPoly& f) {
  if (f.degree() < 1) throw DomainError("irreducibility is undefined for constant polynomials");
  if (f.degree() == 1) return true;
  const FieldPoly g = monic(f);
  const auto n = static_cast<unsigned>(g.degree());
  const FieldPtr& F = coefficient_field(g);
  const FieldPoly x = FieldPoly::x(FieldElement::zero(F));
  std::vector<FieldPoly> frob{x % g};
  for (unsigned i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), F->cardinality(), g));
  if (frob[n] != frob[0]) return false;
  for (unsigned r : prime_divisors(n))
    if (poly_gcd(g, frob[n / r] - x).degree() != 0) return false;
  return true;
}

std::vector<std::pair<FieldPoly, unsigned>> distinct_degree_factorization(const FieldPoly& f) {
  if (f.is_zero()) throw DomainError("distinct-degree factorization of zero");
  std::vector<std::pair<FieldPoly, unsigned>> out;
  const FieldPtr& F = coefficient_field(f);
  const FieldPoly x = FieldPoly::x(FieldElement::zero(F));
  FieldPoly g = monic(f);
  FieldPoly h = x % g;
  for (unsigned i = 1; g.degree() > 0; ++i) {
    h = powmod(h, F->cardinality(), g);
    FieldPoly d = poly_gcd(g, h - x);
    if (d.degree() > 0) {
      out.emplace_back(d, i);
      for (FieldPoly c = d; c.degree() > 0; c = poly_gcd(g, d)) g = exact_div(g, c);
      if (g.degree() > 0) h = h % g;
    }
  }
  return out;
}

unsigned splitting_degree(const FieldPoly& f) {
  unsigned deg = 1;
  for (const auto& [factor, i] : distinct_degree_factorization(f)) deg = std::lcm(deg, i);
  return deg;
}

unsigned root_multiplicity(const FieldPoly& f, const FieldElement& r) {
  if (f.is_zero()) throw DomainError("every element is a root of the zero polynomial");
  const FieldPoly lin = FieldPoly::x(zero_like(r)) - FieldPoly::constant(r);
  unsigned m = 0;
  FieldPoly g = f;
  for (;;) {
    auto [q, rem] = divmod(g, lin);
    if (!rem.is_zero()) return m;
    ++m;
    g = std::move(q);
  }
}

std::vector<FieldElement> roots_in_field(const FieldPoly& f, const FieldPtr& field) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  const FieldPtr F = common_field(field, coefficient_field(f));
  if (F != field) throw ContextMismatch("root field must contain the coefficient field");
  std::vector<FieldElement> roots;
  if (f.degree() < 1) return roots;
  const FieldPoly g(f.coeffs(), FieldElement::zero(F));
  if (F->cardinality() <= FiniteField::kTableLimit) {
    const auto codes = codes_of(g);
    for (Code c = 0; c < F->cardinality(); ++c) {
      if (eval_code(*F, codes, c) != 0) continue;
      const FieldElement r(F, c);
      const unsigned m = root_multiplicity(g, r);
      roots.insert(roots.end(), m, r);
    }
    return roots;
  }
  const FieldPoly x = FieldPoly::x(FieldElement::zero(F));
  const FieldPoly distinct = poly_gcd(g, powmod(x, F->cardinality(), monic(g)) - x);
  std::mt19937_64 rng(0x5eed);
  std::vector<FieldElement> simple;
  split_linear(distinct, rng, simple);
  std::sort(simple.begin(), simple.end(), [](const auto& a, const auto& b) { return a.code() < b.code(); });
  for (const auto& r : simple) roots.insert(roots.end(), root_multiplicity(g, r), r);
  return roots;
}

std::vector<FieldElement> roots_in_extension(const FieldPoly& f, unsigned m, const std::string& generator) {
  const FieldPtr& K = coefficient_field(f);
  if (!K) throw DomainError("polynomial has no coefficient field");
  const FieldPtr E = m == 1 ? K : FiniteField::extension(K, m, generator);
  return roots_in_field(f, E);
}

std::string to_string(const FieldPoly& f, std::string_view var) {
  return render_poly(f, var, [](const FieldElement& c) { return c.to_string(); });
}

}  // namespace deuring
