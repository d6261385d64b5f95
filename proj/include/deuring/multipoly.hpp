#pragma once

// Sparse multivariate Laurent polynomials over F_q in a fixed set of named
// variables. Exponents may be negative so that monomial denominators can be
// carried exactly; every identity check in the library is a zero test of a
// MultiPoly difference.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "deuring/finite_field.hpp"

namespace deuring {

/// Variables in canonical order (graded-lex ties are broken in this order).
enum class Var : std::uint8_t { T, s, D0, D1, Y, Y1, theta, c };
inline constexpr std::size_t kVarCount = 8;

std::string_view var_name(Var v);
/// Throws ParseError for an unknown name.
Var var_from_name(std::string_view name);

using Exponents = std::array<std::int32_t, kVarCount>;

/// Descending graded-lexicographic order: higher total degree first, then
/// lexicographic on (T, s, D0, D1, Y, Y1, theta, c).
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, FieldElement, GradedLexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(FieldElement zero) : zero_(std::move(zero)) {}

  static MultiPoly constant(const FieldElement& c);
  static MultiPoly variable(const FieldElement& zero, Var v, std::int32_t e = 1);
  static MultiPoly term(const FieldElement& c, const Exponents& e);

  const FieldElement& zero() const { return zero_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Highest / lowest exponent of v over all terms (0 for the zero polynomial).
  std::int32_t degree_in(Var v) const;
  std::int32_t low_degree_in(Var v) const;
  /// True when no exponent is negative.
  bool is_polynomial() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const FieldElement& c, const MultiPoly& f);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly times_monomial(const Exponents& e) const;
  /// The inverse of a single-term polynomial (a unit of the Laurent ring);
  /// throws DomainError for anything else.
  MultiPoly unit_inverse() const;
  /// Collects the terms containing v^e, with v removed.
  MultiPoly coefficient_of(Var v, std::int32_t e) const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const FieldElement& c);

  FieldElement zero_;
  TermMap terms_;
};

inline bool is_zero(const MultiPoly& f) { return f.is_zero(); }
inline MultiPoly zero_like(const MultiPoly& f) { return MultiPoly(f.zero()); }
inline MultiPoly one_like(const MultiPoly& f) { return MultiPoly::constant(one_like(f.zero())); }
MultiPoly frobenius_pow(const MultiPoly& f, std::uint64_t q, unsigned k);
inline MultiPoly scalar_like(const MultiPoly& proto, const FieldElement& a) {
  return MultiPoly::constant(scalar_like(proto.zero(), a));
}
inline std::string to_string(const MultiPoly& f) { return f.to_string(); }

/// P with v replaced by `value` (exponents of v must be non-negative).
MultiPoly substitute(const MultiPoly& P, Var v, const MultiPoly& value);

/// den^m * P(v = num/den) where m = degree_in(v) of P; exact and polynomial in
/// num, den. Exponents of v must be non-negative.
MultiPoly substitute_cleared(const MultiPoly& P, Var v, const MultiPoly& num, const MultiPoly& den);

}  // namespace deuring
