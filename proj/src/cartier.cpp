#include "picard/cartier.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "picard/errors.hpp"

namespace picard {

namespace {

// Basis index of the differential x^a dx / y^b, if it is one of z1, z2, z3.
std::optional<std::size_t> basis_index(u64 x_power, u64 y_power) noexcept {
  for (std::size_t k = 0; k < DifferentialBasis::kElements.size(); ++k) {
    const auto& e = DifferentialBasis::kElements[k];
    if (e.x_power == x_power && e.y_power == y_power) return k;
  }
  return std::nullopt;
}

// Basis index of the monomial x^i y^j appearing as h in (h/F_y) dx.
std::optional<std::size_t> adjoint_index(Monomial m) noexcept {
  for (std::size_t k = 0; k < DifferentialBasis::kElements.size(); ++k) {
    if (DifferentialBasis::kElements[k].adjoint == m) return k;
  }
  return std::nullopt;
}

}  // namespace

std::optional<u64> cartier_monomial_rule(u64 j, u64 p) noexcept {
  if ((j + 1) % p != 0) return std::nullopt;
  return (j + 1) / p - 1;
}

std::optional<Monomial> NablaIndexRule::image(Monomial source, u64 p) noexcept {
  const u64 xs = u64{source.x} + 1;
  const u64 ys = u64{source.y} + 1;
  if (xs % p != 0 || ys % p != 0) return std::nullopt;
  return Monomial{static_cast<std::uint32_t>(xs / p - 1), static_cast<std::uint32_t>(ys / p - 1)};
}

std::optional<Monomial> NablaIndexRule::source(Monomial output, Monomial shift,
                                               u64 p) noexcept {
  const u64 x = u64{output.x} * p + p - 1;
  const u64 y = u64{output.y} * p + p - 1;
  if (x < shift.x || y < shift.y) return std::nullopt;
  return Monomial{static_cast<std::uint32_t>(x - shift.x), static_cast<std::uint32_t>(y - shift.y)};
}

MatrixFp hasse_witt_fast(const PicardCurve& curve) {
  const PrimeField& field = curve.field();
  const u64 p = curve.p();
  const std::size_t bound = 2 * p - 1;
  MatrixFp h(field, Convention::HasseWitt);

  // (y^3 - f)^{p-1} = sum_k binom(p-1, k) y^{3k} (-f)^{p-1-k}, and
  // binom(p-1, k) (-1)^{p-1-k} = 1 mod p, so each entry is a plain
  // coefficient of a power of f.
  if (p % 3 == 1) {
    const DensePoly g = pow(curve.f(), (2 * p - 2) / 3, bound);
    const DensePoly e = pow(curve.f(), (p - 1) / 3, bound);
    h.set(0, 0, g.coeff_residue(p - 1));
    h.set(0, 1, g.coeff_residue(2 * p - 1));
    h.set(1, 0, g.coeff_residue(p - 2));
    h.set(1, 1, g.coeff_residue(2 * p - 2));
    h.set(2, 2, e.coeff_residue(p - 1));
  } else {
    const DensePoly g = pow(curve.f(), (p - 2) / 3, bound);
    const DensePoly e = pow(curve.f(), (2 * p - 1) / 3, bound);
    h.set(0, 2, g.coeff_residue(p - 1));
    h.set(1, 2, g.coeff_residue(p - 2));
    h.set(2, 0, e.coeff_residue(p - 1));
    h.set(2, 1, e.coeff_residue(2 * p - 1));
  }
  return h;
}

MatrixFp hasse_witt_oracle(const PicardCurve& curve, u64 oracle_bound) {
  const u64 p = curve.p();
  if (p > oracle_bound) {
    throw OracleBoundExceeded("p=" + std::to_string(p) + " exceeds the oracle bound " +
                              std::to_string(oracle_bound));
  }
  const PrimeField& field = curve.field();
  const BivariatePoly big_f =
      BivariatePoly::monomial(field, 1, {0, 3}) - BivariatePoly::lift(curve.f());
  const BivariatePoly power = pow(big_f, p - 1);

  MatrixFp h(field, Convention::HasseWitt);
  for (std::size_t row = 0; row < DifferentialBasis::kElements.size(); ++row) {
    const Monomial adjoint = DifferentialBasis::kElements[row].adjoint;
    const BivariatePoly shifted = power * BivariatePoly::monomial(field, 1, adjoint);
    for (const auto& [m, c] : shifted.terms()) {
      const auto out = NablaIndexRule::image(m, p);
      if (!out) continue;
      // Only the basis coordinates are read; the p-th root is the identity
      // on F_p.
      if (const auto col = adjoint_index(*out)) h.set(row, *col, c);
    }
  }
  return h;
}

MatrixFp cartier_matrix(const PicardCurve& curve) {
  const PrimeField& field = curve.field();
  const u64 p = curve.p();
  MatrixFp c(field, Convention::Cartier);

  for (std::size_t col = 0; col < DifferentialBasis::kElements.size(); ++col) {
    const auto& z = DifferentialBasis::kElements[col];
    // x^a dx / y^b = y^{-mp} * y^{mp-b} * x^a dx with 3 | mp - b, so
    // y^{mp-b} = f^{(mp-b)/3} and C(y^{-mp} w) = y^{-m} C(w).
    u64 m = 1;
    while ((m * p - z.y_power) % 3 != 0) ++m;
    const DensePoly integrand =
        DensePoly::monomial(field, 1, z.x_power) * pow(curve.f(), (m * p - z.y_power) / 3);

    const auto coeffs = integrand.residues();
    for (u64 j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      const auto image_power = cartier_monomial_rule(j, p);
      if (!image_power) continue;
      const auto row = basis_index(*image_power, m);
      if (!row) {
        throw std::logic_error("Cartier image of " + std::string(z.label) +
                               " left the space of holomorphic differentials");
      }
      c.set(*row, col, field.add(c(*row, col), coeffs[j]));
    }
  }
  return c;
}

int a_number(const PicardCurve& curve) {
  return PicardCurve::kGenus - rank_fp(cartier_matrix(curve));
}

int p_rank(const PicardCurve& curve) {
  const MatrixFp h = hasse_witt_fast(curve);
  const MatrixFp twisted = h.frobenius_twist();
  return rank_fp(h * twisted * twisted.frobenius_twist());
}

CurveInvariants compute_invariants(const PicardCurve& curve) {
  MatrixFp h = hasse_witt_fast(curve);
  const int rank_h = rank_fp(h);
  const MatrixFp twisted = h.frobenius_twist();
  const int stable = rank_fp(h * twisted * twisted.frobenius_twist());
  const int a = PicardCurve::kGenus - rank_fp(cartier_matrix(curve));
  return {std::move(h), rank_h, a, stable};
}

}  // namespace picard
