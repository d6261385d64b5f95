#pragma once

// Dense univariate polynomials over an arbitrary commutative coefficient ring.
//
// A coefficient type R must provide +, -, *, unary -, == and the free functions
// is_zero(R), zero_like(R), one_like(R) (found by ADL). Every polynomial keeps a
// zero prototype of its coefficient ring so that empty polynomials still know
// where they live.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "deuring/errors.hpp"
#include "deuring/finite_field.hpp"

namespace deuring {

namespace detail {
// Unqualified call so that ADL finds the coefficient ring's is_zero.
template <class R>
bool coeff_is_zero(const R& x) {
  return is_zero(x);
}
}  // namespace detail

template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(R zero) : zero_(std::move(zero)) {}
  Poly(std::vector<R> coeffs, R zero) : c_(std::move(coeffs)), zero_(std::move(zero)) {
    normalize();
  }

  static Poly constant(const R& c) { return Poly({c}, zero_like(c)); }
  static Poly monomial(const R& c, std::size_t e) {
    std::vector<R> v(e + 1, zero_like(c));
    v[e] = c;
    return Poly(std::move(v), zero_like(c));
  }
  /// The indeterminate over the ring of `zero`.
  static Poly x(const R& zero) { return monomial(one_like(zero), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const R& zero() const { return zero_; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const R& leading() const { return c_.empty() ? zero_ : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == one_like(zero_); }

  Poly operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) { return accumulate(o, false); }
  Poly& operator-=(const Poly& o) { return accumulate(o, true); }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }

  friend Poly operator*(const R& s, const Poly& f) {
    Poly r(zero_like(s * f.zero_));
    if (detail::coeff_is_zero(s)) return r;
    r.c_.reserve(f.c_.size());
    for (const auto& c : f.c_) r.c_.push_back(s * c);
    r.normalize();
    return r;
  }
  friend Poly operator*(const Poly& f, const R& s) { return s * f; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Multiplies by x^e.
  Poly shifted(std::size_t e) const {
    if (c_.empty()) return *this;
    std::vector<R> v(e, zero_);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v), zero_);
  }

  /// Keeps the terms of degree <= d.
  Poly truncated(std::size_t d) const {
    if (c_.size() <= d + 1) return *this;
    return Poly(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(d + 1)), zero_);
  }

 private:
  static Poly multiply(const Poly& a, const Poly& b);
  Poly& accumulate(const Poly& o, bool subtract);
  void normalize();

  std::vector<R> c_;
  R zero_{};
};

// ---------------------------------------------------------------------------
// Ring interface for nested use (polynomials over polynomials).

template <class R>
bool is_zero(const Poly<R>& f) {
  return f.is_zero();
}
template <class R>
Poly<R> zero_like(const Poly<R>& f) {
  return Poly<R>(zero_like(f.zero()));
}
template <class R>
Poly<R> one_like(const Poly<R>& f) {
  return Poly<R>::constant(one_like(f.zero()));
}
template <class R>
Poly<R> scalar_like(const Poly<R>& proto, const FieldElement& a) {
  return Poly<R>({scalar_like(proto.zero(), a)}, proto.zero());
}

/// n * x by double-and-add.
template <class R>
R times_int(const R& x, long long n) {
  R acc = zero_like(x);
  R base = n < 0 ? -x : x;
  unsigned long long m = n < 0 ? 0ULL - static_cast<unsigned long long>(n) : static_cast<unsigned long long>(n);
  while (m) {
    if (m & 1ULL) acc = acc + base;
    m >>= 1;
    if (m) base = base + base;
  }
  return acc;
}

template <class R>
R power(R base, std::uint64_t e) {
  R acc = one_like(base);
  while (e) {
    if (e & 1ULL) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

template <class R>
Poly<R> derivative(const Poly<R>& f) {
  std::vector<R> v;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) v.push_back(times_int(f.coeffs()[i], static_cast<long long>(i)));
  return Poly<R>(std::move(v), f.zero());
}

/// Horner evaluation at a point of a (possibly larger) ring V.
template <class R, class V>
V evaluate(const Poly<R>& f, const V& x) {
  V acc = zero_like(x);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// f(g(x)).
template <class R>
Poly<R> compose(const Poly<R>& f, const Poly<R>& g) {
  Poly<R> acc(zero_like(g.zero()));
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * g + Poly<R>::constant(*it);
  return acc;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) throw DomainError("exponent overflow");
    r *= base;
  }
  return r;
}

/// The q^k-th power map in characteristic p: coefficients are twisted and every
/// exponent is multiplied by q^k.
template <class R>
Poly<R> frobenius_pow(const Poly<R>& f, std::uint64_t q, unsigned k) {
  if (f.is_zero() || k == 0) return f;
  const std::uint64_t step = checked_pow(q, k);
  std::vector<R> v(static_cast<std::size_t>(f.degree()) * step + 1, f.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    if (!is_zero(f.coeffs()[i])) v[i * step] = frobenius_pow(f.coeffs()[i], q, k);
  return Poly<R>(std::move(v), f.zero());
}

/// Applies `fn` to every coefficient, producing a polynomial over another ring.
template <class R, class Fn, class S>
Poly<S> map_coeffs(const Poly<R>& f, Fn&& fn, const S& zero) {
  std::vector<S> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) v.push_back(fn(c));
  return Poly<S>(std::move(v), zero);
}

/// Renders terms `c*V^e` in descending degree, joined by " + ".
template <class R, class Fn>
std::string render_poly(const Poly<R>& f, std::string_view var, Fn&& coeff) {
  if (f.is_zero()) return "0";
  std::string out;
  const R one = one_like(f.zero());
  for (int i = f.degree(); i >= 0; --i) {
    const R& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    std::string term;
    if (i == 0) {
      term = coeff(c);
    } else {
      std::string mono(var);
      if (i > 1) mono += "^" + std::to_string(i);
      if (c == one) {
        term = mono;
      } else {
        std::string cs = coeff(c);
        if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
        term = cs + "*" + mono;
      }
    }
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Implementation.

template <class R>
void Poly<R>::normalize() {
  if constexpr (std::is_same_v<R, FieldElement>) {
    FieldPtr f = zero_.field();
    for (const auto& c : c_)
      if (c.field() != f) f = common_field(f, c.field());
    if (f != zero_.field()) zero_ = FieldElement(f, 0);
    for (auto& c : c_)
      if (c.field() != f) c = FieldElement(f, c.code());
  }
  while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
}

template <class R>
Poly<R>& Poly<R>::accumulate(const Poly& o, bool subtract) {
  if constexpr (std::is_same_v<R, FieldElement>) {
    FieldPtr f = common_field(zero_.field(), o.zero_.field());
    if (!f) return *this;
    const FiniteField& F = *f;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElement(f, 0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      FieldElement::Code a = c_[i].code();
      if (i < o.c_.size()) a = subtract ? F.sub(a, o.c_[i].code()) : F.add(a, o.c_[i].code());
      c_[i] = FieldElement(f, a);
    }
    zero_ = FieldElement(f, 0);
  } else {
    zero_ = zero_ + o.zero_;
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      if (subtract)
        c_[i] -= o.c_[i];
      else
        c_[i] += o.c_[i];
    }
  }
  normalize();
  return *this;
}

template <class R>
Poly<R> Poly<R>::multiply(const Poly& a, const Poly& b) {
  if constexpr (std::is_same_v<R, FieldElement>) {
    FieldPtr f = common_field(a.zero_.field(), b.zero_.field());
    Poly r(FieldElement(f, 0));
    if (a.c_.empty() || b.c_.empty()) return r;
    const FiniteField& F = *f;
    std::vector<FieldElement::Code> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const auto ai = a.c_[i].code();
      if (ai == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        const auto bj = b.c_[j].code();
        if (bj == 0) continue;
        acc[i + j] = F.add(acc[i + j], F.mul(ai, bj));
      }
    }
    r.c_.reserve(acc.size());
    for (auto code : acc) r.c_.emplace_back(f, code);
    r.normalize();
    return r;
  } else {
    Poly r(a.zero_ * b.zero_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, r.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (detail::coeff_is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.normalize();
    return r;
  }
}

}  // namespace deuring
