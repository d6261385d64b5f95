#include "deuring/laurent.hpp"

#include <algorithm>

#include "deuring/errors.hpp"

namespace deuring {

ConstantField ConstantField::make(std::uint64_t q) {
  if (q < 2) throw DomainError("q must be a prime power >= 2");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  FieldPtr fp = FiniteField::prime(static_cast<std::uint32_t>(p));
  ConstantField cf;
  cf.q = q;
  cf.field = e == 1 ? fp : FiniteField::extension(fp, e, "x");
  return cf;
}

Laurent::Laurent(TPoly numerator, long long shift) : num_(std::move(numerator)), shift_(shift) { normalize(); }

Laurent Laurent::t_power(const ConstantField& fq, long long e) { return Laurent(fq.constant(fq.one()), e); }

void Laurent::normalize() {
  if (num_.is_zero()) {
    shift_ = 0;
    return;
  }
  std::size_t low = 0;
  while (num_.coeffs()[low].is_zero()) ++low;
  if (low == 0) return;
  num_ = TPoly(std::vector<FieldElement>(num_.coeffs().begin() + static_cast<std::ptrdiff_t>(low), num_.coeffs().end()),
               num_.zero());
  shift_ += static_cast<long long>(low);
}

FieldElement Laurent::coefficient(long long e) const {
  if (e < shift_) return num_.zero();
  return num_[static_cast<std::size_t>(e - shift_)];
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = Laurent(num_ + o.num_, o.shift_);
  const long long low = std::min(shift_, o.shift_);
  TPoly a = num_.shifted(static_cast<std::size_t>(shift_ - low));
  a += o.num_.shifted(static_cast<std::size_t>(o.shift_ - low));
  num_ = std::move(a);
  shift_ = low;
  normalize();
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  num_ = num_ * o.num_;
  shift_ += o.shift_;
  normalize();
  return *this;
}

std::string Laurent::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = num_.degree(); i >= 0; --i) {
    const FieldElement& c = num_.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const long long e = shift_ + i;
    if (e == 0) {
      out += c.to_string();
      continue;
    }
    std::string mono = "T";
    if (e != 1) mono += "^" + std::to_string(e);
    if (c.is_one()) {
      out += mono;
    } else {
      std::string cs = c.to_string();
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      out += cs + "*" + mono;
    }
  }
  return out;
}

Laurent frobenius_pow(const Laurent& x, std::uint64_t q, unsigned k) {
  if (x.is_zero() || k == 0) return x;
  const auto step = static_cast<long long>(checked_pow(q, k));
  return Laurent(frobenius_pow(x.numerator(), q, k), x.shift() * step);
}

}  // namespace deuring
