#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "picard/prime_field.hpp"

namespace picard {

// Dense univariate polynomial over F_p, coefficient index = x-degree.
// Always normalized: no trailing zeros, the zero polynomial is empty.
class DensePoly {
 public:
  explicit DensePoly(const PrimeField& field) : field_(field) {}
  // Coefficients constant-first; arbitrary integers are reduced mod p.
  DensePoly(const PrimeField& field, std::span<const i64> coeffs);
  DensePoly(const PrimeField& field, std::initializer_list<i64> coeffs)
      : DensePoly(field, std::span<const i64>(coeffs.begin(), coeffs.size())) {}

  // Takes ownership of residues already in [0, p).
  static DensePoly from_residues(const PrimeField& field, std::vector<u64> residues);
  static DensePoly monomial(const PrimeField& field, u64 coefficient, std::size_t degree);

  const PrimeField& field() const noexcept { return field_; }
  std::span<const u64> residues() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  // Zero when out of range.
  FieldElement coeff(std::size_t index) const noexcept;
  u64 coeff_residue(std::size_t index) const noexcept {
    return index < coeffs_.size() ? coeffs_[index] : 0;
  }
  FieldElement leading() const noexcept;

  DensePoly monic() const;

  DensePoly operator+(const DensePoly& rhs) const;
  DensePoly operator-(const DensePoly& rhs) const;
  DensePoly operator*(const DensePoly& rhs) const;

  friend bool operator==(const DensePoly& a, const DensePoly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() noexcept;
  void require_same_field(const DensePoly& rhs) const;

  PrimeField field_;
  std::vector<u64> coeffs_;
};

// Schoolbook product. With a truncation bound N every coefficient of
// x-degree > N is dropped.
DensePoly multiply(const DensePoly& a, const DensePoly& b,
                   std::optional<std::size_t> truncation = std::nullopt);

// Binary exponentiation; truncates after every multiplication when bounded.
DensePoly pow(const DensePoly& f, u64 exponent,
              std::optional<std::size_t> truncation = std::nullopt);

DensePoly derivative(const DensePoly& f);

struct DivMod {
  DensePoly quotient;
  DensePoly remainder;
};
// Throws DivisionByZero when the divisor is zero.
DivMod divmod(const DensePoly& a, const DensePoly& b);

// Monic gcd by the Euclidean algorithm. Throws UsageError if both are zero.
DensePoly gcd(const DensePoly& a, const DensePoly& b);

// True iff f has no repeated roots over the algebraic closure. A nonconstant
// f with f' = 0 is a p-th power and therefore not squarefree.
// Throws UsageError for f = 0.
bool is_squarefree(const DensePoly& f);

}  // namespace picard
