#pragma once

// Rank-2 Drinfeld modules in Legendre form
//   psi_T = D t^2 - (D + g) t + g = (D t - g)(t - 1),   g = gamma(T),
// their j-invariants, the supersingularity test, and the Deuring polynomials
// h (in the Delta-invariant) and H (in the lambda-invariant).

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "deuring/ore.hpp"
#include "deuring/prime.hpp"

namespace deuring {

/// A[D] with the twist T -> T^q, D -> D^q.
using APoly = Poly<TPoly>;

/// psi_T = D t^2 - (D + g) t + g over any coefficient ring.
template <class R>
OrePoly<R> legendre_psi(std::uint64_t q, const R& delta, const R& gamma) {
  return OrePoly<R>(q, {gamma, -(delta + gamma), delta}, zero_like(delta));
}

class DeltaModule {
 public:
  /// Throws DomainError when gamma = 0 or delta = 0.
  DeltaModule(std::uint64_t q, FieldElement gamma, FieldElement delta);

  std::uint64_t q() const { return q_; }
  const FieldElement& gamma() const { return gamma_; }
  const FieldElement& delta() const { return delta_; }
  OrePoly<FieldElement> psi_T() const { return legendre_psi(q_, delta_, gamma_); }

 private:
  std::uint64_t q_;
  FieldElement gamma_;
  FieldElement delta_;
};

class LambdaModule {
 public:
  /// Throws DegenerateLambda when lambda lies in F_q, DomainError when gamma = 0.
  LambdaModule(std::uint64_t q, FieldElement gamma, FieldElement lambda);

  std::uint64_t q() const { return q_; }
  const FieldElement& gamma() const { return gamma_; }
  const FieldElement& lambda() const { return lambda_; }
  OrePoly<FieldElement> psi_T() const;

 private:
  std::uint64_t q_;
  FieldElement gamma_;
  FieldElement lambda_;
};

/// D = g / (lambda^q - lambda)^(q-1).
DeltaModule delta_from_lambda(const LambdaModule& m);

/// (D + g)^(q+1) / D.
FieldElement j_invariant(const DeltaModule& m);
/// g^q (1 + L^(q-1))^(q+1) / L^(q^2-q) with L = lambda^q - lambda.
FieldElement j_invariant(const LambdaModule& m);

/// Whether the t^d coefficient of psi_{p(T)} vanishes. Throws
/// CharacteristicMismatch unless p(gamma) = 0.
bool is_supersingular(const DeltaModule& m, const PrimeModulus& p);
bool is_supersingular(const LambdaModule& m, const PrimeModulus& p);

enum class Method { Direct, GRecurrence, Universal };
std::string method_name(Method m);
/// Accepts "direct", "grec" and "universal"; throws DomainError otherwise.
Method method_from_name(const std::string& name);

struct DeuringResult {
  PrimeModulus prime;
  Method method;
  FieldPoly h;  ///< in the Delta-invariant
  FieldPoly H;  ///< in the lambda-invariant
};

/// {q, p, d, method, h_coeffs, H_coeffs}; coefficient lists run from the
/// constant term upwards.
nlohmann::json to_json(const DeuringResult& r);

/// The Legendre module over kappa[D] with symbolic D and gamma(T) = alpha.
OrePoly<FieldPoly> symbolic_psi_T(const PrimeModulus& p);
/// psi_T over A[D] with gamma the identity (generic characteristic).
OrePoly<APoly> generic_psi_T(const ConstantField& fq);

/// g_0, ..., g_{2d} of psi_{p(T)} over kappa[D], by expanding the Ore product.
std::vector<FieldPoly> g_coefficients_direct(const PrimeModulus& p);

/// g_0, ..., g_{k_max} over kappa[D] from the commutation recurrence.
///
/// In characteristic p(T) the recurrence divides by alpha^(q^k) - alpha, which
/// vanishes at k = d. Up to k = d the recurrence is therefore run over A[D]
/// (gamma the identity, where every division by T^(q^k) - T is exact) and the
/// result reduced mod p(T); for d < k < 2d it continues over kappa[D].
/// Throws RecurrenceBreakdown for k_max >= 2d.
std::vector<FieldPoly> g_coefficients_grec(const PrimeModulus& p, unsigned k_max);

/// The recurrence run over kappa[D] from seeds g_{k0-2}, g_{k0-1} up to k1.
/// Throws RecurrenceBreakdown(k) at the first k with alpha^(q^k) = alpha.
std::vector<FieldPoly> g_recurrence_residue(const PrimeModulus& p, const FieldPoly& g_prev2,
                                            const FieldPoly& g_prev1, unsigned k0, unsigned k1);

/// h = (-1)^d g_d; throws InternalConsistency unless monic of degree (q^d-1)/(q-1).
FieldPoly h_from_g(const PrimeModulus& p, const FieldPoly& g_d);

DeuringResult deuring_h_direct(const PrimeModulus& p);
DeuringResult deuring_h_grec(const PrimeModulus& p);

/// H(s) = ((s^q - s)^(q-1)/alpha^q)^N h(alpha/(s^q - s)^(q-1)), N = deg h.
/// Throws DomainError unless h is monic of degree (q^d-1)/(q-1), and
/// InternalConsistency if the result is not monic of degree q^(d+1) - q.
FieldPoly deuring_H(const PrimeModulus& p, const FieldPoly& h);

/// (q^d - 1)/(q - 1).
std::uint64_t deuring_degree(std::uint64_t q, unsigned d);

}  // namespace deuring
