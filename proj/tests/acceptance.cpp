// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "deuring/drinfeld.hpp"
#include "deuring/errors.hpp"
#include "deuring/expr.hpp"
#include "deuring/isogeny_graph.hpp"
#include "deuring/tower.hpp"
#include "deuring/universal.hpp"

using namespace deuring;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// deg <= 3 for q in {2, 3, 4}, deg <= 2 for q = 5
std::vector<PrimeModulus> prime_set(unsigned max_d_cap = 3) {
  std::vector<PrimeModulus> out;
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const unsigned dmax = std::min(q == 5 ? 2u : 3u, max_d_cap);
    for (auto& p : enumerate_primes(ConstantField::make(q), dmax)) out.push_back(std::move(p));
  }
  return out;
}

void criterion_1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t n = 0;
  for (const auto& p : prime_set()) {
    const auto direct = deuring_h_direct(p).h;
    const auto grec = deuring_h_grec(p).h;
    const auto uni = reduce_mod_prime(u_sequence(p.constants(), p.degree()).at(static_cast<int>(p.degree())), p);
    if (direct != grec || direct != uni) o.fail("disagreement at q=" + std::to_string(p.q()) + " p=" + p.to_string());
    ++n;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 60) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.note << n << " primes, " << secs << " s";
}

void criterion_2(Outcome& o) {
  std::size_t n = 0;
  for (const auto& p : prime_set()) {
    const auto h = deuring_h_direct(p).h;
    const auto U = reduce_mod_prime(U_sequence(p.constants(), p.degree()).at(static_cast<int>(p.degree())), p);
    if (deuring_H(p, h) != U) o.fail("H != U_d mod p at q=" + std::to_string(p.q()) + " p=" + p.to_string());
    ++n;
  }
  if (o.pass) o.note << n << " primes";
}

void criterion_3(Outcome& o) {
  for (const auto& p : prime_set()) {
    const auto h = deuring_h_direct(p).h;
    const auto N = deuring_degree(p.q(), p.degree());
    const std::string at = " at q=" + std::to_string(p.q()) + " p=" + p.to_string();
    if (!h.is_monic() || h.degree() != static_cast<int>(N)) o.fail("shape" + at);
    if (h[0].is_zero()) o.fail("h(0) = 0" + at);
    if (poly_gcd(h, derivative(h)).degree() != 0) o.fail("repeated root" + at);
  }
  if (o.pass) o.note << "monic, degree (q^d-1)/(q-1), h(0) != 0, gcd(h, h') = 1";
}

void criterion_4(Outcome& o) {
  for (unsigned q : {2u, 3u}) {
    const auto fq = ConstantField::make(q);
    const auto u = u_sequence(fq, 5);
    for (unsigned i = 0; i <= 5; ++i) {
      const auto e = q * (ipow(q, i) - 1) / (q - 1);
      if (u.at(static_cast<int>(i))[0] != fq.t_power(e))
        o.fail("u_" + std::to_string(i) + "(0) at q=" + std::to_string(q));
    }
  }
  if (o.pass) o.note << "i <= 5, q in {2, 3}";
}

void criterion_5(Outcome& o) {
  for (unsigned i = 0; i <= 3; ++i)
    if (!check_key_identity(ConstantField::make(2), i)) o.fail("q=2 i=" + std::to_string(i));
  for (unsigned i = 0; i <= 2; ++i)
    if (!check_key_identity(ConstantField::make(3), i)) o.fail("q=3 i=" + std::to_string(i));
  if (o.pass) o.note << "q=2 i<=3, q=3 i<=2";
}

void criterion_6(Outcome& o) {
  std::size_t n = 0;
  for (unsigned q : {2u, 3u}) {
    for (const auto& p : enumerate_primes(ConstantField::make(q), q == 2 ? 3 : 2)) {
      const auto g = build_supersingular_graph(p);
      const auto r = verify_component(g);
      std::vector<unsigned> out(g.vertices.size(), 0);
      for (const auto& e : g.edges) out[e.from] += e.multiplicity;
      bool regular = true;
      for (auto k : out) regular = regular && k == q;
      const std::string at = " at q=" + std::to_string(q) + " p=" + p.to_string();
      if (g.vertices.size() != deuring_degree(q, p.degree())) o.fail("size" + at);
      if (!regular || !r.regular) o.fail("out-degree" + at);
      if (!r.closed) o.fail("not closed" + at);
      if (!r.connected) o.fail("not connected" + at);
      ++n;
    }
  }
  if (o.pass) o.note << n << " graphs";
}

void criterion_7(Outcome& o) {
  const auto p = PrimeModulus::parse(ConstantField::make(2), "T^2+T+1");
  const auto F16 = FiniteField::extension(p.residue_field(), 2, "b");
  const FieldElement a = p.alpha().embed(F16);
  std::size_t count = 0;
  bool one_ss = false;
  for (FieldElement::Code c = 1; c < F16->cardinality(); ++c) {
    const FieldElement D(F16, c);
    const bool ss = is_supersingular(DeltaModule(2, a, D), p);
    // h = s^3 + a s^2 + a s + 1 by hand
    const bool root = (D * D * D + a * D * D + a * D + one_like(D)).is_zero();
    if (ss != root) o.fail("mismatch at " + D.to_string());
    count += ss;
    if (ss && D.is_one()) one_ss = true;
  }
  if (count != 3) o.fail(std::to_string(count) + " supersingular values");
  if (!one_ss) o.fail("Delta = 1 not supersingular");
  if (o.pass) o.note << "3 of 15, including 1";
}

void criterion_8(Outcome& o) {
  std::size_t n = 0;
  for (const auto& p : prime_set(2)) {
    const unsigned d = p.degree();
    const auto q = p.q();
    const auto g = g_coefficients_direct(p);
    const auto one = FieldElement::one(p.residue_field());
    const std::string at = " at q=" + std::to_string(q) + " p=" + p.to_string();
    for (unsigned k = 0; k < d; ++k)
      if (!g[k].is_zero()) o.fail("g_" + std::to_string(k) + " != 0" + at);
    std::uint64_t e = 0;
    for (unsigned i = 0; i < d; ++i) e += ipow(q, 2 * i);
    if (g[2 * d] != FieldPoly::monomial(one, e)) o.fail("g_2d" + at);
    const auto N = deuring_degree(q, d);
    if (g[d].degree() != static_cast<int>(N) || g[d].leading() != (d % 2 ? -one : one)) o.fail("lead(g_d)" + at);
    const auto h = deuring_h_direct(p).h;
    for (unsigned k = d; k < 2 * d; ++k)
      if (!divides(h, g[k])) o.fail("h does not divide g_" + std::to_string(k) + at);
    ++n;
  }
  if (o.pass) o.note << n << " primes";
}

void criterion_9(Outcome& o) {
  for (unsigned q : {2u, 3u, 4u}) {
    for (const auto& r : verify_tower(ConstantField::make(q)))
      if (!r.verified) o.fail(r.name + " at q=" + std::to_string(q));
    const auto j = j_chain_check(ConstantField::make(q));
    if (j.j_map_degree != static_cast<int>(q * q * q - q)) o.fail("j-map degree at q=" + std::to_string(q));
  }
  if (o.pass) o.note << "4 identities, q in {2, 3, 4}; j-map degrees 6, 24, 60";
}

void criterion_10(Outcome& o) {
  for (unsigned q : {2u, 3u}) {
    const auto r = check_derivative_recursion(ConstantField::make(q), 4);
    if (!r.ok()) o.fail("q=" + std::to_string(q));
  }
  if (o.pass) o.note << "i <= 4, q in {2, 3}";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"three-way agreement of h", criterion_1},
      {"H from h equals U_d mod p", criterion_2},
      {"h monic, separable, h(0) != 0", criterion_3},
      {"u_i(0) = T^(q(q^i-1)/(q-1))", criterion_4},
      {"key identity", criterion_5},
      {"supersingular graph component", criterion_6},
      {"supersingularity over F_16", criterion_7},
      {"g_k structure of psi_p", criterion_8},
      {"tower identities", criterion_9},
      {"derivative recursion", criterion_10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << " (" << o.note.str() << ")\n";
    failed += !o.pass;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
