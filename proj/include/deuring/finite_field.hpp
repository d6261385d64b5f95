#pragma once

// Finite fields built as towers F_p ⊆ F_q ⊆ ... where every level is stored over
// its immediate base with an explicit monic irreducible defining polynomial.
//
// Elements are encoded as integers ("codes"): an element sum_{i<k} c_i x^i of a
// degree-k extension of B has code sum_i code(c_i) * |B|^i. A subfield element
// therefore has the same code in every field above it in its tower, which makes
// embedding free.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace deuring {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

class FiniteField {
 public:
  using Code = std::uint64_t;

  /// Largest cardinality for which log/antilog tables are built.
  static constexpr Code kTableLimit = Code{1} << 16;

  static FieldPtr prime(std::uint32_t p);

  /// Extension of `base` by a monic irreducible polynomial given as base codes,
  /// lowest degree first. Throws DomainError if the polynomial is not monic
  /// irreducible or the field would not fit the code range.
  static FieldPtr extend(FieldPtr base, std::vector<Code> modulus, std::string generator);

  /// Degree-k extension of `base` whose defining polynomial is the smallest monic
  /// irreducible one, ordering candidates by the integer sum_i c_i |B|^i.
  static FieldPtr extension(FieldPtr base, unsigned k, std::string generator);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  unsigned total_degree() const { return n_; }
  Code cardinality() const { return card_; }
  const FieldPtr& base() const { return base_; }
  const std::vector<Code>& modulus() const { return modulus_; }
  const std::string& generator_name() const { return name_; }
  bool is_prime_field() const { return base_ == nullptr; }

  /// True when `sub` is this field or lies below it in the tower.
  bool contains(const FiniteField& sub) const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t e) const;
  Code from_int(long long n) const;
  /// Code of the adjoined generator (for a degree-1 extension, the root of the modulus).
  Code generator() const;

  /// Canonical text: polynomial in the generator, descending powers, with base
  /// coefficients rendered recursively.
  std::string render(Code a) const;

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

 private:
  FiniteField() = default;
  void build_tables();
  Code mul_tower(Code a, Code b) const;

  std::uint32_t p_ = 0;
  unsigned k_ = 1;
  unsigned n_ = 1;
  Code card_ = 0;
  Code base_card_ = 0;
  FieldPtr base_;
  std::vector<Code> modulus_;
  std::string name_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Value type for an element of a constructed field. Binary operations between
/// elements of fields in one tower promote to the larger field. A
/// default-constructed element has no field and acts as an absorbing zero.
class FieldElement {
 public:
  using Code = FiniteField::Code;

  FieldElement() = default;
  FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {}

  static FieldElement from_int(const FieldPtr& field, long long n) {
    return {field, field->from_int(n)};
  }
  static FieldElement zero(const FieldPtr& field) { return {field, 0}; }
  static FieldElement one(const FieldPtr& field) { return {field, 1}; }
  static FieldElement generator(const FieldPtr& field) { return {field, field->generator()}; }

  const FieldPtr& field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  /// Re-tags this element as an element of `target`, which must contain its field.
  FieldElement embed(const FieldPtr& target) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  FieldPtr field_;
  Code code_ = 0;
};

/// The larger of two fields in a common tower; throws ContextMismatch otherwise.
/// A null pointer stands for "any field".
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

/// x^(q^k), by k successive q-th powers.
FieldElement frobenius(const FieldElement& x, std::uint64_t q, unsigned k);

// Ring interface used by the generic polynomial containers.
inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline FieldElement zero_like(const FieldElement& x) { return {x.field(), 0}; }
inline FieldElement one_like(const FieldElement& x) { return {x.field(), 1}; }
inline FieldElement frobenius_pow(const FieldElement& x, std::uint64_t q, unsigned k) {
  return frobenius(x, q, k);
}
/// Image of an F_q scalar in the ring of `proto`.
inline FieldElement scalar_like(const FieldElement& proto, const FieldElement& a) {
  return a.embed(common_field(proto.field(), a.field()));
}
inline std::string to_string(const FieldElement& x) { return x.to_string(); }

}  // namespace deuring
