#include "picard/dense_poly.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "picard/errors.hpp"

namespace picard {

DensePoly::DensePoly(const PrimeField& field, std::span<const i64> coeffs) : field_(field) {
  coeffs_.reserve(coeffs.size());
  for (const i64 c : coeffs) coeffs_.push_back(field_.reduce(c));
  normalize();
}

DensePoly DensePoly::from_residues(const PrimeField& field, std::vector<u64> residues) {
  DensePoly out(field);
  out.coeffs_ = std::move(residues);
  out.normalize();
  return out;
}

DensePoly DensePoly::monomial(const PrimeField& field, u64 coefficient, std::size_t degree) {
  std::vector<u64> residues(degree + 1, 0);
  residues[degree] = coefficient % field.modulus();
  return from_residues(field, std::move(residues));
}

void DensePoly::normalize() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void DensePoly::require_same_field(const DensePoly& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw UsageError("polynomials over different fields: F_" +
                     std::to_string(field_.modulus()) + " vs F_" +
                     std::to_string(rhs.field_.modulus()));
  }
}

std::optional<std::size_t> DensePoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

FieldElement DensePoly::coeff(std::size_t index) const noexcept {
  return FieldElement(field_, coeff_residue(index));
}

FieldElement DensePoly::leading() const noexcept {
  return FieldElement(field_, coeffs_.empty() ? 0 : coeffs_.back());
}

DensePoly DensePoly::monic() const {
  if (is_zero()) throw DivisionByZero("monic() of the zero polynomial");
  const u64 scale = field_.inv(coeffs_.back());
  std::vector<u64> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(),
                 [&](u64 c) { return field_.mul(c, scale); });
  return from_residues(field_, std::move(out));
}

DensePoly DensePoly::operator+(const DensePoly& rhs) const {
  require_same_field(rhs);
  std::vector<u64> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = field_.add(coeff_residue(i), rhs.coeff_residue(i));
  }
  return from_residues(field_, std::move(out));
}

DensePoly DensePoly::operator-(const DensePoly& rhs) const {
  require_same_field(rhs);
  std::vector<u64> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = field_.sub(coeff_residue(i), rhs.coeff_residue(i));
  }
  return from_residues(field_, std::move(out));
}

DensePoly DensePoly::operator*(const DensePoly& rhs) const { return multiply(*this, rhs); }

DensePoly multiply(const DensePoly& a, const DensePoly& b,
                   std::optional<std::size_t> truncation) {
  if (!(a.field() == b.field())) {
    throw UsageError("polynomials over different fields");
  }
  const PrimeField& field = a.field();
  if (a.is_zero() || b.is_zero()) return DensePoly(field);

  const auto lhs = a.residues();
  const auto rhs = b.residues();
  std::size_t out_len = lhs.size() + rhs.size() - 1;
  if (truncation) out_len = std::min(out_len, *truncation + 1);

  // Residues are < 2^31, so every product fits in a u64 before reduction.
  const u64 p = field.modulus();
  std::vector<u64> out(out_len, 0);
  for (std::size_t i = 0; i < lhs.size() && i < out_len; ++i) {
    const u64 ai = lhs[i];
    if (ai == 0) continue;
    const std::size_t j_end = std::min(rhs.size(), out_len - i);
    for (std::size_t j = 0; j < j_end; ++j) {
      const u64 s = out[i + j] + (ai * rhs[j]) % p;
      out[i + j] = s >= p ? s - p : s;
    }
  }
  return DensePoly::from_residues(field, std::move(out));
}

DensePoly pow(const DensePoly& f, u64 exponent, std::optional<std::size_t> truncation) {
  DensePoly result = DensePoly::monomial(f.field(), 1, 0);
  DensePoly base = f;
  if (truncation) base = multiply(base, result, truncation);
  while (exponent > 0) {
    if (exponent & 1) result = multiply(result, base, truncation);
    exponent >>= 1;
    if (exponent > 0) base = multiply(base, base, truncation);
  }
  return result;
}

DensePoly derivative(const DensePoly& f) {
  const auto c = f.residues();
  if (c.size() <= 1) return DensePoly(f.field());
  const PrimeField& field = f.field();
  std::vector<u64> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    out[i - 1] = field.mul(c[i], static_cast<u64>(i) % field.modulus());
  }
  return DensePoly::from_residues(field, std::move(out));
}

DivMod divmod(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!(a.field() == b.field())) throw UsageError("polynomials over different fields");
  const PrimeField& field = a.field();
  const auto divisor = b.residues();
  const std::size_t db = divisor.size() - 1;
  std::vector<u64> rem(a.residues().begin(), a.residues().end());
  if (rem.size() <= db) return {DensePoly(field), a};

  const u64 lead_inv = field.inv(divisor.back());
  std::vector<u64> quot(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    const u64 q = field.mul(rem[k], lead_inv);
    quot[k - db] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k - db + j] = field.sub(rem[k - db + j], field.mul(q, divisor[j]));
    }
  }
  rem.resize(db);
  return {DensePoly::from_residues(field, std::move(quot)),
          DensePoly::from_residues(field, std::move(rem))};
}

DensePoly gcd(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() && b.is_zero()) throw UsageError("gcd(0, 0) is undefined");
  DensePoly r0 = a;
  DensePoly r1 = b;
  while (!r1.is_zero()) {
    DensePoly r2 = divmod(r0, r1).remainder;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

bool is_squarefree(const DensePoly& f) {
  if (f.is_zero()) throw UsageError("squarefreeness of the zero polynomial");
  if (f.is_constant()) return true;
  const DensePoly df = derivative(f);
  if (df.is_zero()) return false;
  return gcd(f, df).is_constant();
}

}  // namespace picard
