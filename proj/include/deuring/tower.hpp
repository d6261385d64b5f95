#pragma once

// Identities behind the equations of the curves X_0(T^n), checked in
// F_q[T^{+-1}, D0^{+-1}, D1^{+-1}, Y, Y1, theta^{+-1}, s, c] with gamma(T)
// replaced by the indeterminate T.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "deuring/laurent.hpp"
#include "deuring/multipoly.hpp"

namespace deuring {

struct IdentityReport {
  std::string name;
  std::uint64_t q = 0;
  bool verified = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  /// s-degree of the cleared numerator of j(lambda) - c (j_chain only).
  int j_map_degree = 0;
  /// One line per sub-check that failed.
  std::vector<std::string> failures;
};

/// (D0+T^q)^(q+1) D1 - (D1+T)^(q+1) D0^q equals the product of the dual-isogeny
/// factor and the degree-(q-1, q) factor, all multiplied by D0^q D1.
IdentityReport verify_factorization(const ConstantField& fq);

/// D0 = theta^(q-1)(theta+T), D1 = (theta+T)^q/theta^(q-1) and the Y-form
/// D0 = -T^q (Y+1)^(q-1) Y, D1 = -T Y^q/(Y+1)^(q-1) both satisfy the second
/// factor; Y = -(theta+T)/T turns the Y-form into the theta-form.
IdentityReport verify_theta_parametrization(const ConstantField& fq);

/// Equating -T^q (Y1+1)^(q-1) Y1 with -T Y^q/(Y+1)^(q-1) and clearing
/// denominators gives -T times (Y1+1)^(q-1) Y1 T^(q-1) (Y+1)^(q-1) - Y^q.
IdentityReport verify_recursion_step(const ConstantField& fq);

/// The modular equation holds on the Y-parametrization; the isogenous module
/// (t - 1)(D0 t - T) has the expected j-invariant; the lambda- and Delta-forms
/// of j agree; and j(lambda) - c has cleared numerator of s-degree q^3 - q.
IdentityReport j_chain_check(const ConstantField& fq);

/// All four reports, in the order above.
std::vector<IdentityReport> verify_tower(const ConstantField& fq);

nlohmann::json to_json(const IdentityReport& r);

}  // namespace deuring
