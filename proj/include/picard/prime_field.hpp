#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace picard {

using u64 = std::uint64_t;
using i64 = std::int64_t;

class FieldElement;

// The prime field F_p for a prime 3 < p < 2^31. The bound keeps every
// product of two residues inside 64 bits.
class PrimeField {
 public:
  static constexpr u64 kMaxModulus = u64{1} << 31;

  // Throws InvalidField unless p is a prime in (3, 2^31).
  explicit PrimeField(i64 p);

  u64 modulus() const noexcept { return p_; }

  FieldElement zero() const noexcept;
  FieldElement one() const noexcept;
  // Reduces any signed integer to its canonical residue.
  FieldElement element(i64 value) const noexcept;

  u64 reduce(i64 value) const noexcept;
  u64 add(u64 a, u64 b) const noexcept { return a + b >= p_ ? a + b - p_ : a + b; }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const noexcept { return (a * b) % p_; }
  u64 pow(u64 a, u64 e) const noexcept;
  // Throws DivisionByZero for a == 0.
  u64 inv(u64 a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  u64 p_;
};

bool is_prime(u64 n) noexcept;

// A canonical residue in [0, p) tagged with its modulus. Mixing elements of
// different fields throws UsageError.
class FieldElement {
 public:
  FieldElement(const PrimeField& field, u64 canonical_value) noexcept
      : value_(canonical_value), p_(field.modulus()) {}

  u64 value() const noexcept { return value_; }
  u64 modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator-() const noexcept;

  FieldElement inverse() const;
  FieldElement pow(u64 exponent) const noexcept;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldElement(u64 value, u64 p, int) noexcept : value_(value), p_(p) {}
  void check_same_field(const FieldElement& rhs) const;

  u64 value_;
  u64 p_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace picard
