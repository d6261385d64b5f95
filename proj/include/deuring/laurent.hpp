#pragma once

// The constant field F_q, the ring A = F_q[T] and its localisation A[1/T].

#include <cstdint>
#include <string>

#include "deuring/field_poly.hpp"

namespace deuring {

/// Element of A = F_q[T].
using TPoly = Poly<FieldElement>;

/// F_q together with the integer q. Prime powers are built as a deterministic
/// extension of the prime field with generator `x`.
struct ConstantField {
  std::uint64_t q = 0;
  FieldPtr field;

  static ConstantField make(std::uint64_t q);

  FieldElement zero() const { return FieldElement::zero(field); }
  FieldElement one() const { return FieldElement::one(field); }
  FieldElement from_int(long long n) const { return FieldElement::from_int(field, n); }
  /// The polynomial T in A.
  TPoly T() const { return TPoly::x(zero()); }
  TPoly constant(const FieldElement& c) const { return TPoly({c}, zero()); }
  TPoly t_power(std::size_t e) const { return TPoly::monomial(one(), e); }
};

/// numerator * T^shift with numerator(0) != 0 (lowest terms), or zero.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(TPoly numerator, long long shift = 0);

  static Laurent t_power(const ConstantField& fq, long long e);

  const TPoly& numerator() const { return num_; }
  long long shift() const { return shift_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Lowest and highest power of T present (shift for zero).
  long long low_degree() const { return shift_; }
  long long high_degree() const { return shift_ + num_.degree(); }
  /// Coefficient of T^e.
  FieldElement coefficient(long long e) const;

  Laurent operator-() const { return Laurent(-num_, shift_); }
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o) { return *this += -o; }
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();

  TPoly num_;
  long long shift_ = 0;
};

inline bool is_zero(const Laurent& x) { return x.is_zero(); }
inline Laurent zero_like(const Laurent& x) { return Laurent(zero_like(x.numerator())); }
inline Laurent one_like(const Laurent& x) { return Laurent(one_like(x.numerator())); }
Laurent frobenius_pow(const Laurent& x, std::uint64_t q, unsigned k);
inline Laurent scalar_like(const Laurent& proto, const FieldElement& a) {
  return Laurent(scalar_like(proto.numerator(), a));
}
inline std::string to_string(const Laurent& x) { return x.to_string(); }

/// Renders an element of A in the variable T.
inline std::string to_string_T(const TPoly& f) { return to_string(f, "T"); }

}  // namespace deuring
