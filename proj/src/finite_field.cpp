#include "deuring/finite_field.hpp"

#include <limits>

#include "deuring/errors.hpp"
#include "deuring/field_poly.hpp"

namespace deuring {

namespace {

constexpr FiniteField::Code kMaxCardinality = FiniteField::Code{1} << 62;

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldPtr FiniteField::prime(std::uint32_t p) {
  if (!is_prime_number(p) || p > (1U << 31)) throw DomainError("characteristic must be a prime below 2^31");
  std::shared_ptr<FiniteField> f(new FiniteField());
  f->p_ = p;
  f->k_ = 1;
  f->n_ = 1;
  f->card_ = p;
  f->base_card_ = 1;
  return f;
}

FieldPtr FiniteField::extend(FieldPtr base, std::vector<Code> modulus, std::string generator) {
  if (!base) throw DomainError("extension needs a base field");
  if (modulus.size() < 2 || modulus.back() != 1) throw DomainError("defining polynomial must be monic of degree >= 1");
  for (Code c : modulus)
    if (c >= base->cardinality()) throw DomainError("defining polynomial coefficient out of range");
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  Code card = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (card > kMaxCardinality / base->cardinality()) throw DomainError("field too large for the code range");
    card *= base->cardinality();
  }
  if (!is_irreducible(poly_from_codes(base, modulus)))
    throw DomainError("defining polynomial is not irreducible over the base field");

  std::shared_ptr<FiniteField> f(new FiniteField());
  f->p_ = base->p_;
  f->k_ = k;
  f->n_ = base->n_ * k;
  f->card_ = card;
  f->base_card_ = base->cardinality();
  f->base_ = std::move(base);
  f->modulus_ = std::move(modulus);
  f->name_ = std::move(generator);
  if (f->card_ <= kTableLimit) f->build_tables();
  return f;
}

FieldPtr FiniteField::extension(FieldPtr base, unsigned k, std::string generator) {
  if (k == 0) throw DomainError("extension degree must be positive");
  const Code b = base->cardinality();
  if (k == 1) return extend(std::move(base), {0, 1}, std::move(generator));
  Code count = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (count > kMaxCardinality / b) throw DomainError("field too large for the code range");
    count *= b;
  }
  for (Code n = 0; n < count; ++n) {
    if (n % b == 0) continue;  // divisible by x
    std::vector<Code> m(k + 1);
    Code rest = n;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = rest % b;
      rest /= b;
    }
    m[k] = 1;
    if (is_irreducible(poly_from_codes(base, m))) return extend(std::move(base), std::move(m), std::move(generator));
  }
  throw InternalConsistency("no irreducible polynomial found");
}

bool FiniteField::contains(const FiniteField& sub) const {
  for (const FiniteField* f = this; f != nullptr; f = f->base_.get())
    if (f == &sub) return true;
  return false;
}

FiniteField::Code FiniteField::add(Code a, Code b) const {
  if (p_ == 2) return a ^ b;
  Code r = 0;
  Code scale = 1;
  while (a || b) {
    const Code s = (a % p_ + b % p_) % p_;
    r += s * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Code FiniteField::neg(Code a) const {
  if (p_ == 2) return a;
  Code r = 0;
  Code scale = 1;
  while (a) {
    const Code d = a % p_;
    r += ((p_ - d) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

FiniteField::Code FiniteField::sub(Code a, Code b) const { return add(a, neg(b)); }

FiniteField::Code FiniteField::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  if (!base_) return (a * b) % p_;
  if (!log_.empty()) return exp_[(static_cast<Code>(log_[a]) + log_[b]) % (card_ - 1)];
  return mul_tower(a, b);
}

FiniteField::Code FiniteField::mul_tower(Code a, Code b) const {
  const FiniteField& B = *base_;
  std::vector<Code> x(k_), y(k_), prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    x[i] = a % base_card_;
    a /= base_card_;
    y[i] = b % base_card_;
    b /= base_card_;
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (!x[i]) continue;
    for (unsigned j = 0; j < k_; ++j)
      if (y[j]) prod[i + j] = B.add(prod[i + j], B.mul(x[i], y[j]));
  }
  for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
    const Code c = prod[i];
    if (!c) continue;
    for (unsigned j = 0; j < k_; ++j)
      if (modulus_[j]) prod[i - k_ + j] = B.sub(prod[i - k_ + j], B.mul(c, modulus_[j]));
  }
  Code r = 0;
  for (unsigned i = k_; i-- > 0;) r = r * base_card_ + prod[i];
  return r;
}

FiniteField::Code FiniteField::inv(Code a) const {
  if (a == 0) throw DivisionByZero();
  if (!log_.empty()) return exp_[(card_ - 1 - log_[a]) % (card_ - 1)];
  return pow(a, card_ - 2);
}

FiniteField::Code FiniteField::pow(Code a, std::uint64_t e) const {
  Code acc = 1;
  while (e) {
    if (e & 1ULL) acc = mul(acc, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return acc;
}

FiniteField::Code FiniteField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

FiniteField::Code FiniteField::generator() const {
  if (!base_) throw DomainError("a prime field has no adjoined generator");
  if (k_ == 1) return base_->neg(modulus_[0]);
  return base_card_;
}

void FiniteField::build_tables() {
  const Code order = card_ - 1;
  const auto factors = prime_factors(order);
  Code g = 0;
  for (Code c = 2; c < card_ && g == 0; ++c) {
    bool primitive = true;
    for (auto r : factors) {
      if (pow(c, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) g = c;
  }
  if (card_ == 2) g = 1;
  if (g == 0) throw InternalConsistency("no primitive element found");
  exp_.resize(order);
  log_.assign(card_, 0);
  Code x = 1;
  for (Code i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_tower(x, g);
  }
}

std::string FiniteField::render(Code a) const {
  if (!base_) return std::to_string(a);
  if (k_ == 1) return base_->render(a);
  std::vector<Code> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % base_card_;
    a /= base_card_;
  }
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (!c[i]) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += base_->render(c[i]);
      continue;
    }
    std::string mono = name_;
    if (i > 1) mono += "^" + std::to_string(i);
    if (c[i] == 1) {
      out += mono;
    } else {
      std::string cs = base_->render(c[i]);
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      out += cs + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return a;
  if (!a) return b;
  if (!b) return a;
  if (a->contains(*b)) return a;
  if (b->contains(*a)) return b;
  throw ContextMismatch("elements of unrelated finite fields");
}

FieldElement FieldElement::inverse() const {
  if (!field_) throw DivisionByZero();
  return {field_, field_->inv(code_)};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (!field_) return *this;
  return {field_, field_->pow(code_, e)};
}

FieldElement FieldElement::embed(const FieldPtr& target) const {
  if (field_ && field_ != target && !target->contains(*field_))
    throw ContextMismatch("target field does not contain this element's field");
  return {target, code_};
}

FieldElement FieldElement::operator-() const {
  if (!field_) return *this;
  return {field_, field_->neg(code_)};
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (field_ != o.field_) field_ = common_field(field_, o.field_);
  if (field_) code_ = field_->add(code_, o.code_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (field_ != o.field_) field_ = common_field(field_, o.field_);
  if (field_) code_ = field_->sub(code_, o.code_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (field_ != o.field_) field_ = common_field(field_, o.field_);
  if (field_) code_ = field_->mul(code_, o.code_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  if (field_ != o.field_) field_ = common_field(field_, o.field_);
  if (!field_) throw DivisionByZero();
  code_ = field_->mul(code_, field_->inv(o.code_));
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ == b.field_ || !a.field_ || !b.field_) return a.code_ == b.code_;
  if (a.field_->contains(*b.field_) || b.field_->contains(*a.field_)) return a.code_ == b.code_;
  return false;
}

std::string FieldElement::to_string() const { return field_ ? field_->render(code_) : "0"; }

FieldElement frobenius(const FieldElement& x, std::uint64_t q, unsigned k) {
  FieldElement r = x;
  for (unsigned i = 0; i < k; ++i) r = r.pow(q);
  return r;
}

}  // namespace deuring
