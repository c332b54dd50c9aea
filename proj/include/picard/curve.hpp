#pragma once

#include <array>
#include <span>

#include "picard/dense_poly.hpp"
#include "picard/prime_field.hpp"

namespace picard {

// A Picard curve y^3 = f(x) over F_p with f a squarefree quartic.
class PicardCurve {
 public:
  static constexpr int kGenus = 3;

  // Throws DegenerateCurve when deg f != 4 and SingularCurve when f has a
  // repeated root.
  PicardCurve(const PrimeField& field, DensePoly f);

  const PrimeField& field() const noexcept { return field_; }
  u64 p() const noexcept { return field_.modulus(); }
  const DensePoly& f() const noexcept { return f_; }
  int genus() const noexcept { return kGenus; }
  // f as five canonical residues, constant first.
  std::array<u64, 5> coefficients() const noexcept;

 private:
  PrimeField field_;
  DensePoly f_;
};

// Validates p and five integer coefficients (constant first, reduced mod p).
// Throws InvalidField, DegenerateCurve, SingularCurve, or UsageError when the
// coefficient count is not five.
PicardCurve validate_curve(i64 p, std::span<const i64> f_coeffs);

}  // namespace picard
