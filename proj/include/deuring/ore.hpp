#pragma once

// Twisted polynomials sum c_k t^k with t*a = sigma(a)*t, where sigma is the
// q-th power map of the coefficient ring. The ring only needs the ADL
// interface of poly.hpp plus frobenius_pow(R, q, k) and scalar_like(R, F_q).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "deuring/errors.hpp"
#include "deuring/laurent.hpp"
#include "deuring/poly.hpp"

namespace deuring {

template <class R>
class OrePoly {
 public:
  OrePoly() = default;
  OrePoly(std::uint64_t q, std::vector<R> coeffs, R zero) : q_(q), c_(std::move(coeffs)), zero_(std::move(zero)) {
    if (q_ < 2) throw DomainError("Ore polynomial needs q >= 2");
    normalize();
  }

  static OrePoly constant(std::uint64_t q, const R& c) { return OrePoly(q, {c}, zero_like(c)); }
  /// t^k with coefficient one.
  static OrePoly tau(std::uint64_t q, const R& zero, std::size_t k = 1) {
    std::vector<R> v(k + 1, zero);
    v[k] = one_like(zero);
    return OrePoly(q, std::move(v), zero);
  }

  std::uint64_t q() const { return q_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const R& zero() const { return zero_; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](std::size_t k) const { return k < c_.size() ? c_[k] : zero_; }

  OrePoly operator-() const {
    OrePoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend OrePoly operator+(const OrePoly& a, const OrePoly& b) { return combine(a, b, false); }
  friend OrePoly operator-(const OrePoly& a, const OrePoly& b) { return combine(a, b, true); }
  friend bool operator==(const OrePoly& a, const OrePoly& b) {
    if (a.q_ != b.q_ || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

 private:
  static OrePoly combine(const OrePoly& a, const OrePoly& b, bool subtract) {
    if (a.q_ != b.q_) throw ContextMismatch("Ore polynomials over different twists");
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<R> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(subtract ? a[i] - b[i] : a[i] + b[i]);
    return OrePoly(a.q_, std::move(v), a.zero_ + b.zero_);
  }

  void normalize() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::uint64_t q_ = 0;
  std::vector<R> c_;
  R zero_{};
};

/// f*g keeping only the terms of t-degree <= max_degree. The coefficient of
/// t^k is sum_{i+j=k} f_i sigma^i(g_j).
template <class R>
OrePoly<R> ore_mul(const OrePoly<R>& f, const OrePoly<R>& g,
                   std::size_t max_degree = std::numeric_limits<std::size_t>::max()) {
  if (f.q() != g.q()) throw ContextMismatch("Ore polynomials over different twists");
  const R zero = f.zero() * g.zero();
  if (f.is_zero() || g.is_zero()) return OrePoly<R>(f.q(), {}, zero);
  const std::size_t n = std::min(f.coeffs().size() + g.coeffs().size() - 2, max_degree);
  std::vector<R> v(n + 1, zero);
  for (std::size_t i = 0; i < f.coeffs().size() && i <= n; ++i) {
    if (detail::coeff_is_zero(f.coeffs()[i])) continue;
    for (std::size_t j = 0; j < g.coeffs().size() && i + j <= n; ++j) {
      if (detail::coeff_is_zero(g.coeffs()[j])) continue;
      v[i + j] = v[i + j] + f.coeffs()[i] * frobenius_pow(g.coeffs()[j], f.q(), static_cast<unsigned>(i));
    }
  }
  return OrePoly<R>(f.q(), std::move(v), zero);
}

template <class R>
OrePoly<R> operator*(const OrePoly<R>& f, const OrePoly<R>& g) {
  return ore_mul(f, g);
}

/// Value of the additive polynomial: sum c_k x^(q^k).
template <class R, class V>
V ore_apply(const OrePoly<R>& f, const V& x) {
  V acc = zero_like(x);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k)
    acc = acc + f.coeffs()[k] * frobenius_pow(x, f.q(), static_cast<unsigned>(k));
  return acc;
}

/// Image of a(T) under the F_q-algebra map T -> psi_T, by Horner's rule.
/// With `max_degree` the computation is truncated consistently (the low
/// coefficients of a product only depend on the low coefficients of the factors).
template <class R>
OrePoly<R> drinfeld_image(const OrePoly<R>& psi_T, const TPoly& a,
                          std::size_t max_degree = std::numeric_limits<std::size_t>::max()) {
  const R zero = psi_T.zero();
  OrePoly<R> acc(psi_T.q(), {}, zero);
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    acc = ore_mul(acc, psi_T, max_degree);
    if (!it->is_zero()) acc = acc + OrePoly<R>::constant(psi_T.q(), scalar_like(zero, *it));
  }
  return acc;
}

/// Renders c_n*t^n + ... + c_0.
template <class R>
std::string to_string(const OrePoly<R>& f) {
  const Poly<R> as_poly(f.coeffs(), f.zero());
  return render_poly(as_poly, "t", [](const R& c) { return to_string(c); });
}

}  // namespace deuring
