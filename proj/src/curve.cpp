#include "picard/curve.hpp"

#include <string>
#include <utility>

#include "picard/errors.hpp"

namespace picard {

PicardCurve::PicardCurve(const PrimeField& field, DensePoly f)
    : field_(field), f_(std::move(f)) {
  if (!(f_.field() == field_)) throw UsageError("curve polynomial over a different field");
  const auto deg = f_.degree();
  if (!deg || *deg != 4) {
    throw DegenerateCurve("f must have degree exactly 4 over F_" +
                          std::to_string(field_.modulus()) + ", got degree " +
                          (deg ? std::to_string(*deg) : std::string("-inf")));
  }
  if (!is_squarefree(f_)) {
    throw SingularCurve("f has a repeated root over F_" + std::to_string(field_.modulus()));
  }
}

std::array<u64, 5> PicardCurve::coefficients() const noexcept {
  std::array<u64, 5> out{};
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f_.coeff_residue(i);
  return out;
}

PicardCurve validate_curve(i64 p, std::span<const i64> f_coeffs) {
  if (f_coeffs.size() != 5) {
    throw UsageError("expected 5 coefficients c0..c4, got " + std::to_string(f_coeffs.size()));
  }
  const PrimeField field(p);
  return PicardCurve(field, DensePoly(field, f_coeffs));
}

}  // namespace picard
