#include "picard/prime_field.hpp"

#include <string>
#include <utility>

#include "picard/errors.hpp"

namespace picard {

namespace {

u64 inverse_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
  // Extended Euclid on signed 64-bit; p < 2^31 so nothing overflows.
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(p), new_r = static_cast<i64>(a);
  while (new_r != 0) {
    const i64 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<i64>(p);
  return static_cast<u64>(t);
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(i64 p) : p_(0) {
  if (p <= 3) {
    throw InvalidField("characteristic must exceed 3, got p=" + std::to_string(p));
  }
  if (static_cast<u64>(p) >= kMaxModulus) {
    throw InvalidField("p=" + std::to_string(p) + " exceeds the supported bound 2^31");
  }
  if (!is_prime(static_cast<u64>(p))) {
    throw InvalidField("p=" + std::to_string(p) + " is not prime");
  }
  p_ = static_cast<u64>(p);
}

FieldElement PrimeField::zero() const noexcept { return FieldElement(*this, 0); }
FieldElement PrimeField::one() const noexcept { return FieldElement(*this, 1); }

FieldElement PrimeField::element(i64 value) const noexcept {
  return FieldElement(*this, reduce(value));
}

u64 PrimeField::reduce(i64 value) const noexcept {
  const i64 m = static_cast<i64>(p_);
  i64 r = value % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 PrimeField::pow(u64 a, u64 e) const noexcept {
  u64 result = 1 % p_;
  a %= p_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

u64 PrimeField::inv(u64 a) const { return inverse_mod(a, p_); }

void FieldElement::check_same_field(const FieldElement& rhs) const {
  if (p_ != rhs.p_) {
    throw UsageError("field mismatch: F_" + std::to_string(p_) + " vs F_" +
                     std::to_string(rhs.p_));
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same_field(rhs);
  const u64 s = value_ + rhs.value_;
  return {s >= p_ ? s - p_ : s, p_, 0};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same_field(rhs);
  return {value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + p_ - rhs.value_, p_, 0};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same_field(rhs);
  return {(value_ * rhs.value_) % p_, p_, 0};
}

FieldElement FieldElement::operator-() const noexcept {
  return {value_ == 0 ? 0 : p_ - value_, p_, 0};
}

FieldElement FieldElement::inverse() const {
  return {inverse_mod(value_, p_), p_, 0};
}

FieldElement FieldElement::pow(u64 exponent) const noexcept {
  u64 result = 1 % p_;
  u64 base = value_;
  while (exponent > 0) {
    if (exponent & 1) result = (result * base) % p_;
    base = (base * base) % p_;
    exponent >>= 1;
  }
  return {result, p_, 0};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value(); }

}  // namespace picard
