#include "deuring/expr.hpp"

#include <cctype>
#include <optional>

namespace deuring {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr sum() {
    Expr out{Expr::Kind::Sum, 0, {}, {}};
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    for (;;) {
      Expr t = product();
      if (negate) t = Expr{Expr::Kind::Negate, 0, {}, {std::move(t)}};
      out.children.push_back(std::move(t));
      if (accept('+'))
        negate = false;
      else if (accept('-'))
        negate = true;
      else
        break;
    }
    if (out.children.size() == 1) return std::move(out.children.front());
    return out;
  }

  Expr product() {
    Expr out{Expr::Kind::Product, 0, {}, {}};
    out.children.push_back(power());
    while (accept('*')) out.children.push_back(power());
    if (out.children.size() == 1) return std::move(out.children.front());
    return out;
  }

  Expr power() {
    Expr base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip();
    const auto n = integer();
    if (!n) fail("expected integer exponent");
    return Expr{Expr::Kind::Power, negative ? -*n : *n, {}, {std::move(base)}};
  }

  std::optional<long long> integer() {
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) return std::nullopt;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (std::numeric_limits<long long>::max() - 9) / 10) fail("integer too large");
      v = v * 10 + (s_[pos_++] - '0');
    }
    return v;
  }

  Expr atom() {
    skip();
    if (accept('(')) {
      Expr e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (auto n = integer()) return Expr{Expr::Kind::Integer, *n, {}, {}};
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Expr{Expr::Kind::Variable, 0, std::string(s_.substr(start, pos_ - start)), {}};
    }
    fail("expected a number, variable or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

/// Generator of a level of the tower of `field`, embedded into `field`.
std::optional<FieldElement> tower_generator(const FieldPtr& field, std::string_view name) {
  for (const FiniteField* f = field.get(); f && !f->is_prime_field(); f = f->base().get())
    if (f->generator_name() == name) return FieldElement(field, f->generator());
  return std::nullopt;
}

FieldElement field_power(const FieldElement& x, long long e) {
  if (e >= 0) return x.pow(static_cast<std::uint64_t>(e));
  return x.inverse().pow(static_cast<std::uint64_t>(-e));
}

[[noreturn]] void unknown(std::string_view name) {
  throw ParseError("unknown variable '" + std::string(name) + "'");
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

FieldElement parse_element(const FieldPtr& field, std::string_view text) {
  Evaluator<FieldElement> ev;
  ev.variable = [&](std::string_view name) {
    if (auto g = tower_generator(field, name)) return *g;
    unknown(name);
  };
  ev.integer = [&](long long n) { return FieldElement::from_int(field, n); };
  ev.power = field_power;
  return evaluate(parse_expression(text), ev);
}

TPoly parse_tpoly(const ConstantField& fq, std::string_view text) {
  Evaluator<TPoly> ev;
  ev.variable = [&](std::string_view name) {
    if (name == "T") return fq.T();
    if (auto g = tower_generator(fq.field, name)) return fq.constant(*g);
    unknown(name);
  };
  ev.integer = [&](long long n) { return fq.constant(fq.from_int(n)); };
  return evaluate(parse_expression(text), ev);
}

Laurent parse_laurent(const ConstantField& fq, std::string_view text) {
  Evaluator<Laurent> ev;
  ev.variable = [&](std::string_view name) {
    if (name == "T") return Laurent::t_power(fq, 1);
    if (auto g = tower_generator(fq.field, name)) return Laurent(fq.constant(*g));
    unknown(name);
  };
  ev.integer = [&](long long n) { return Laurent(fq.constant(fq.from_int(n))); };
  ev.power = [&](const Laurent& x, long long e) {
    if (e >= 0) return power(x, static_cast<std::uint64_t>(e));
    if (x.is_zero() || x.numerator().degree() != 0) throw ParseError("only monomials can be inverted");
    const Laurent inv(fq.constant(x.numerator()[0].inverse()), -x.shift());
    return power(inv, static_cast<std::uint64_t>(-e));
  };
  return evaluate(parse_expression(text), ev);
}

Poly<FieldElement> parse_field_poly(const FieldPtr& field, std::string_view text, std::string_view var) {
  using P = Poly<FieldElement>;
  const FieldElement zero = FieldElement::zero(field);
  Evaluator<P> ev;
  ev.variable = [&](std::string_view name) {
    if (name == var) return P::x(zero);
    if (auto g = tower_generator(field, name)) return P::constant(*g);
    unknown(name);
  };
  ev.integer = [&](long long n) { return P::constant(FieldElement::from_int(field, n)); };
  P f = evaluate(parse_expression(text), ev);
  return P(f.coeffs(), zero);
}

Poly<TPoly> parse_apoly(const ConstantField& fq, std::string_view text) {
  using P = Poly<TPoly>;
  const TPoly zero(fq.zero());
  Evaluator<P> ev;
  ev.variable = [&](std::string_view name) {
    if (name == "s") return P::x(zero);
    if (name == "T") return P::constant(fq.T());
    if (auto g = tower_generator(fq.field, name)) return P::constant(fq.constant(*g));
    unknown(name);
  };
  ev.integer = [&](long long n) { return P::constant(fq.constant(fq.from_int(n))); };
  return evaluate(parse_expression(text), ev);
}

MultiPoly parse_multipoly(const ConstantField& fq, std::string_view text) {
  const FieldElement zero = fq.zero();
  Evaluator<MultiPoly> ev;
  ev.variable = [&](std::string_view name) {
    if (auto g = tower_generator(fq.field, name)) return MultiPoly::constant(*g);
    return MultiPoly::variable(zero, var_from_name(name));
  };
  ev.integer = [&](long long n) { return MultiPoly::constant(fq.from_int(n)); };
  ev.power = [](const MultiPoly& x, long long e) {
    if (e >= 0) return power(x, static_cast<std::uint64_t>(e));
    return power(x.unit_inverse(), static_cast<std::uint64_t>(-e));
  };
  return evaluate(parse_expression(text), ev);
}

}  // namespace deuring
