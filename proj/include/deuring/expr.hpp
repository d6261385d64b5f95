#pragma once

// Text grammar for polynomials: terms `c*V^e` joined by `+` or `-`, products
// with `*`, integer exponents (negative ones where the target ring allows),
// parentheses, integer literals reduced mod p. Whitespace is insignificant.
// The renderers in this library produce a subset of this grammar.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "deuring/errors.hpp"
#include "deuring/laurent.hpp"
#include "deuring/multipoly.hpp"

namespace deuring {

struct Expr {
  enum class Kind { Integer, Variable, Sum, Product, Negate, Power };
  Kind kind = Kind::Integer;
  long long value = 0;  // integer literal, or exponent for Power
  std::string name;     // variable name
  std::vector<Expr> children;
};

/// Throws ParseError with the offending position.
Expr parse_expression(std::string_view text);

template <class R>
struct Evaluator {
  std::function<R(std::string_view)> variable;
  std::function<R(long long)> integer;
  /// x^e; when empty, non-negative exponents use repeated squaring and
  /// negative ones are rejected.
  std::function<R(const R&, long long)> power;
};

template <class R>
R evaluate(const Expr& e, const Evaluator<R>& ev) {
  switch (e.kind) {
    case Expr::Kind::Integer:
      return ev.integer(e.value);
    case Expr::Kind::Variable:
      return ev.variable(e.name);
    case Expr::Kind::Negate:
      return -evaluate(e.children.front(), ev);
    case Expr::Kind::Sum: {
      R acc = evaluate(e.children.front(), ev);
      for (std::size_t i = 1; i < e.children.size(); ++i) acc = acc + evaluate(e.children[i], ev);
      return acc;
    }
    case Expr::Kind::Product: {
      R acc = evaluate(e.children.front(), ev);
      for (std::size_t i = 1; i < e.children.size(); ++i) acc = acc * evaluate(e.children[i], ev);
      return acc;
    }
    case Expr::Kind::Power: {
      R base = evaluate(e.children.front(), ev);
      if (ev.power) return ev.power(base, e.value);
      if (e.value < 0) throw ParseError("negative exponent not allowed here");
      R acc = one_like(base);
      for (long long i = 0; i < e.value; ++i) acc = acc * base;
      return acc;
    }
  }
  throw ParseError("malformed expression");
}

/// Element of `field`; generator names of every level of its tower are accepted.
FieldElement parse_element(const FieldPtr& field, std::string_view text);
/// Element of A = F_q[T]; F_q elements may use the generator of F_q.
TPoly parse_tpoly(const ConstantField& fq, std::string_view text);
/// Element of A[1/T].
Laurent parse_laurent(const ConstantField& fq, std::string_view text);
/// Univariate polynomial over `field` in variable `var`.
Poly<FieldElement> parse_field_poly(const FieldPtr& field, std::string_view text, std::string_view var = "s");
/// Polynomial in s over A.
Poly<TPoly> parse_apoly(const ConstantField& fq, std::string_view text);
/// Multivariate polynomial over F_q in the variables of Var.
MultiPoly parse_multipoly(const ConstantField& fq, std::string_view text);

}  // namespace deuring
