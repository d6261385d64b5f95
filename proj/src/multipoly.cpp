#include "deuring/multipoly.hpp"

#include <algorithm>
#include <vector>

#include "deuring/errors.hpp"
#include "deuring/poly.hpp"

namespace deuring {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames{"T", "s", "D0", "D1", "Y", "Y1", "theta", "c"};

std::int64_t total_degree(const Exponents& e) {
  std::int64_t t = 0;
  for (auto x : e) t += x;
  return t;
}

}  // namespace

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

Var var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (kNames[i] == name) return static_cast<Var>(i);
  throw ParseError("unknown variable '" + std::string(name) + "'");
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto ta = total_degree(a), tb = total_degree(b);
  if (ta != tb) return ta > tb;
  return a > b;
}

MultiPoly MultiPoly::constant(const FieldElement& c) { return term(c, Exponents{}); }

MultiPoly MultiPoly::variable(const FieldElement& zero, Var v, std::int32_t e) {
  Exponents ex{};
  ex[static_cast<std::size_t>(v)] = e;
  return term(one_like(zero), ex);
}

MultiPoly MultiPoly::term(const FieldElement& c, const Exponents& e) {
  MultiPoly r(zero_like(c));
  if (!c.is_zero()) r.terms_.emplace(e, c);
  return r;
}

void MultiPoly::add_term(const Exponents& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::int32_t MultiPoly::degree_in(Var v) const {
  if (terms_.empty()) return 0;
  std::int32_t d = std::numeric_limits<std::int32_t>::min();
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

std::int32_t MultiPoly::low_degree_in(Var v) const {
  if (terms_.empty()) return 0;
  std::int32_t d = std::numeric_limits<std::int32_t>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, e[static_cast<std::size_t>(v)]);
  return d;
}

bool MultiPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (auto x : e)
      if (x < 0) return false;
  return true;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  zero_ += o.zero_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  zero_ += o.zero_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(a.zero_ * b.zero_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly operator*(const FieldElement& c, const MultiPoly& f) {
  MultiPoly r(zero_like(c * f.zero_));
  if (c.is_zero()) return r;
  for (const auto& [e, x] : f.terms_) r.terms_.emplace(e, c * x);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (it->first != e || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

MultiPoly MultiPoly::times_monomial(const Exponents& m) const {
  MultiPoly r(zero_);
  for (const auto& [e, c] : terms_) {
    Exponents x;
    for (std::size_t i = 0; i < kVarCount; ++i) x[i] = e[i] + m[i];
    r.terms_.emplace(x, c);
  }
  return r;
}

MultiPoly MultiPoly::unit_inverse() const {
  if (terms_.size() != 1) throw DomainError("only single-term Laurent polynomials are units");
  const auto& [e, c] = *terms_.begin();
  Exponents inv;
  for (std::size_t i = 0; i < kVarCount; ++i) inv[i] = -e[i];
  return term(c.inverse(), inv);
}

MultiPoly MultiPoly::coefficient_of(Var v, std::int32_t power) const {
  MultiPoly r(zero_);
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) {
    if (e[idx] != power) continue;
    Exponents x = e;
    x[idx] = 0;
    r.terms_.emplace(x, c);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kNames[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      std::string cs = c.to_string();
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      out += cs + "*" + mono;
    }
  }
  return out;
}

MultiPoly frobenius_pow(const MultiPoly& f, std::uint64_t q, unsigned k) {
  if (k == 0) return f;
  const auto step = static_cast<std::int64_t>(checked_pow(q, k));
  MultiPoly r(f.zero());
  for (const auto& [e, c] : f.terms()) {
    Exponents x;
    for (std::size_t i = 0; i < kVarCount; ++i) x[i] = static_cast<std::int32_t>(e[i] * step);
    r += MultiPoly::term(frobenius(c, q, k), x);
  }
  return r;
}

MultiPoly substitute(const MultiPoly& P, Var v, const MultiPoly& value) {
  if (P.low_degree_in(v) < 0) throw DomainError("substitution into a negative power");
  const std::int32_t m = P.degree_in(v);
  std::vector<MultiPoly> powers{one_like(value)};
  for (std::int32_t i = 1; i <= m; ++i) powers.push_back(powers.back() * value);
  MultiPoly r(P.zero() + value.zero());
  for (std::int32_t i = 0; i <= m; ++i) {
    const MultiPoly c = P.coefficient_of(v, i);
    if (!c.is_zero()) r += c * powers[static_cast<std::size_t>(i)];
  }
  return r;
}

MultiPoly substitute_cleared(const MultiPoly& P, Var v, const MultiPoly& num, const MultiPoly& den) {
  if (P.low_degree_in(v) < 0) throw DomainError("substitution into a negative power");
  const std::int32_t m = P.degree_in(v);
  std::vector<MultiPoly> np{one_like(num)}, dp{one_like(den)};
  for (std::int32_t i = 1; i <= m; ++i) {
    np.push_back(np.back() * num);
    dp.push_back(dp.back() * den);
  }
  MultiPoly r(P.zero() + num.zero());
  for (std::int32_t i = 0; i <= m; ++i) {
    const MultiPoly c = P.coefficient_of(v, i);
    if (!c.is_zero()) r += c * np[static_cast<std::size_t>(i)] * dp[static_cast<std::size_t>(m - i)];
  }
  return r;
}

}  // namespace deuring
