#pragma once

// Algorithms for univariate polynomials whose coefficients lie in a finite field:
// Euclidean division, gcd, irreducibility, distinct-degree factorization and
// root finding.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "deuring/finite_field.hpp"
#include "deuring/poly.hpp"

namespace deuring {

using FieldPoly = Poly<FieldElement>;

FieldPoly poly_from_codes(const FieldPtr& field, const std::vector<FieldElement::Code>& codes);

/// Coefficient field of f (the field of its zero prototype).
inline const FieldPtr& coefficient_field(const FieldPoly& f) { return f.zero().field(); }

/// Quotient and remainder; throws DivisionByZero when g = 0.
std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& f, const FieldPoly& g);
FieldPoly operator%(const FieldPoly& f, const FieldPoly& g);
/// f / g, throwing InexactDivision unless g divides f.
FieldPoly exact_div(const FieldPoly& f, const FieldPoly& g);
bool divides(const FieldPoly& g, const FieldPoly& f);

FieldPoly monic(const FieldPoly& f);

/// Monic gcd; gcd(f, 0) = monic(f). Throws UndefinedGcd when both are zero.
FieldPoly poly_gcd(const FieldPoly& f, const FieldPoly& g);

FieldPoly powmod(FieldPoly base, std::uint64_t e, const FieldPoly& mod);

/// x^(Q^times) mod f where Q is the cardinality of the coefficient field.
FieldPoly x_frobenius_mod(const FieldPoly& f, unsigned times);

/// Rabin's test over the coefficient field. Throws DomainError for constants.
bool is_irreducible(const FieldPoly& f);

/// Pairs (g_i, i) where g_i is the product of the distinct monic irreducible
/// factors of f of degree i. Repeated factors are reported once.
std::vector<std::pair<FieldPoly, unsigned>> distinct_degree_factorization(const FieldPoly& f);

/// Degree over the coefficient field of the splitting field of f.
unsigned splitting_degree(const FieldPoly& f);

/// Multiplicity of r as a root of f.
unsigned root_multiplicity(const FieldPoly& f, const FieldElement& r);

/// All roots of f lying in `field` (which must contain the coefficient field),
/// with multiplicity, sorted by code. Exhaustive scan up to
/// FiniteField::kTableLimit elements, equal-degree splitting above.
std::vector<FieldElement> roots_in_field(const FieldPoly& f, const FieldPtr& field);

/// Roots of f in the degree-m extension of its coefficient field. The extension
/// is built deterministically with generator `generator`.
std::vector<FieldElement> roots_in_extension(const FieldPoly& f, unsigned m,
                                             const std::string& generator = "b");

std::string to_string(const FieldPoly& f, std::string_view var = "s");

}  // namespace deuring
