#pragma once

#include <compare>
#include <cstdint>
#include <map>

#include "picard/dense_poly.hpp"
#include "picard/prime_field.hpp"

namespace picard {

struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sparse bivariate polynomial over F_p. Only nonzero coefficients are stored,
// so structural equality coincides with polynomial equality.
class BivariatePoly {
 public:
  using TermMap = std::map<Monomial, u64>;

  explicit BivariatePoly(const PrimeField& field) : field_(field) {}
  // Lifts f(x) to a polynomial with y-degree 0.
  static BivariatePoly lift(const DensePoly& f);
  static BivariatePoly monomial(const PrimeField& field, u64 coefficient, Monomial m);

  const PrimeField& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Zero when absent.
  FieldElement coeff(Monomial m) const noexcept;
  u64 coeff_residue(Monomial m) const noexcept;

  // Univariate slice at a fixed y-degree.
  DensePoly y_slice(std::uint32_t y_degree) const;

  BivariatePoly operator+(const BivariatePoly& rhs) const;
  BivariatePoly operator-(const BivariatePoly& rhs) const;
  BivariatePoly operator*(const BivariatePoly& rhs) const;

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) noexcept {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(Monomial m, u64 residue);

  PrimeField field_;
  TermMap terms_;
};

BivariatePoly pow(const BivariatePoly& f, u64 exponent);

}  // namespace picard
