#pragma once

// The universal sequences
//   u_{i+1} = (s + T^q)^(q^i) u_i - (T^(q^i) - T) s^(q^i) u_{i-1}              over A,
//   U_{i+1} = (D + T^-(q-1))^(q^i) U_i - (T^(q^i) - T)/T^(q^(i+1)) D^(q^(i-1)) U_{i-1}
// over A[1/T] with D = (s^q - s)^(q-1), both started at (0, 1). Reducing u_d
// and U_d mod p(T) gives the Deuring polynomials h and H.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "deuring/drinfeld.hpp"
#include "deuring/multipoly.hpp"

namespace deuring {

template <class R>
struct UniversalSequence {
  char variant = 'u';  ///< 'u' or 'U'
  std::uint64_t q = 0;
  /// terms[i + 1] is the term of index i, starting from index -1.
  std::vector<Poly<R>> terms;

  const Poly<R>& at(int i) const { return terms.at(static_cast<std::size_t>(i + 1)); }
  int max_index() const { return static_cast<int>(terms.size()) - 2; }
};

UniversalSequence<TPoly> u_sequence(const ConstantField& fq, unsigned i_max);
UniversalSequence<Laurent> U_sequence(const ConstantField& fq, unsigned i_max);

/// The term of index i as a polynomial in (T, s).
MultiPoly to_multipoly(const Poly<TPoly>& f);

/// Checks, in F_q[T, s] after multiplying by E = (s+1)^((q-1) deg u_i),
///   u_i(D0) - (T(s+1))^(q^i-1) u_i(D1) = -(T^(q^i) - T)(T(s+1))^(q^i-1) u_{i-1}(D1)
/// with D0 = -T^q s (s+1)^(q-1) and D1 = -T s^q/(s+1)^(q-1).
bool check_key_identity(const ConstantField& fq, unsigned i);

/// gcd(u_d mod p, its derivative) = 1 and u_d mod p has nonzero constant term.
bool check_simple_roots(const PrimeModulus& p);

/// u_i(0) = T^(q(q^i-1)/(q-1)) for 0 <= i <= max_index.
bool check_constant_terms(const UniversalSequence<TPoly>& u);

/// Monic of s-degree (q^i-1)/(q-1) for every i >= 0.
bool check_degrees(const UniversalSequence<TPoly>& u);

struct DerivativeReport {
  /// u'_{i+1} equals the product-rule derivative of the recursion, for 0 <= i <= i_max.
  bool product_rule = true;
  /// u'_{i+1} = (s+T^q)^(q^i) u'_i - (T^(q^i)-T) s^(q^i) u'_{i-1}, for 1 <= i <= i_max.
  bool same_recursion = true;
  bool ok() const { return product_rule && same_recursion; }
};

/// Differentiated recursion up to u_{i_max+1}.
DerivativeReport check_derivative_recursion(const ConstantField& fq, unsigned i_max);

/// h = u_d mod p, H = U_d mod p.
DeuringResult deuring_universal(const PrimeModulus& p);

/// {"variant", "q", "terms"}: one coefficient list (constant term first) per
/// index, from index -1.
nlohmann::json to_json(const UniversalSequence<TPoly>& u);
nlohmann::json to_json(const UniversalSequence<Laurent>& U);

}  // namespace deuring
