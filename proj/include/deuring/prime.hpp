#pragma once

// Primes p(T) of A = F_q[T], their residue fields, and reduction maps
// A -> κ_{p(T)} and A[1/T] -> κ_{p(T)}.

#include <string>
#include <string_view>
#include <vector>

#include "deuring/laurent.hpp"

namespace deuring {

class PrimeModulus {
 public:
  /// Validates that p is monic, irreducible, of positive degree and different
  /// from T; throws InvalidPrime otherwise. The residue field κ = F_q[T]/(p) is
  /// built with generator `a`, the image of T.
  static PrimeModulus make(const ConstantField& fq, const TPoly& p);
  static PrimeModulus parse(const ConstantField& fq, std::string_view text);

  const ConstantField& constants() const { return fq_; }
  std::uint64_t q() const { return fq_.q; }
  const TPoly& poly() const { return p_; }
  unsigned degree() const { return static_cast<unsigned>(p_.degree()); }
  const FieldPtr& residue_field() const { return kappa_; }
  /// α = T + <p(T)>.
  const FieldElement& alpha() const { return alpha_; }

  FieldElement reduce(const TPoly& f) const;
  /// Requires only that α be invertible, which p ≠ T guarantees.
  FieldElement reduce(const Laurent& f) const;

  std::string to_string() const { return to_string_T(p_); }

 private:
  ConstantField fq_;
  TPoly p_;
  FieldPtr kappa_;
  FieldElement alpha_;
};

Poly<FieldElement> reduce_mod_prime(const Poly<TPoly>& f, const PrimeModulus& p);
Poly<FieldElement> reduce_mod_prime(const Poly<Laurent>& f, const PrimeModulus& p);

/// Every monic irreducible p(T) ≠ T with 1 <= deg p <= max_degree, ordered by
/// degree and then by coefficient code.
std::vector<PrimeModulus> enumerate_primes(const ConstantField& fq, unsigned max_degree);

}  // namespace deuring
