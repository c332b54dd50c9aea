#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "picard/bivariate_poly.hpp"
#include "picard/curve.hpp"
#include "picard/matrix.hpp"

namespace picard {

// Holomorphic differentials on a Picard curve, in the fixed order
//   z1 = dx/y^2,  z2 = x dx/y^2,  z3 = dx/y.
// Each is (h/F_y) dx with F = y^3 - f and h/3 = x^a y^b listed below.
struct DifferentialBasis {
  struct Element {
    std::string_view label;
    unsigned x_power;      // a in x^a dx / y^b
    unsigned y_power;      // b in x^a dx / y^b
    Monomial adjoint;      // h/3 as a monomial
  };
  static constexpr std::array<Element, 3> kElements{{
      {"dx/y^2", 0, 2, {0, 0}},
      {"x dx/y^2", 1, 2, {1, 0}},
      {"dx/y", 0, 1, {0, 1}},
  }};
  static constexpr std::array<std::string_view, 3> labels() noexcept {
    return {kElements[0].label, kElements[1].label, kElements[2].label};
  }
};

// C(x^j dx) = x^{s-1} dx when j + 1 = p s, otherwise 0. Returns s - 1, or
// nullopt for the zero image.
std::optional<u64> cartier_monomial_rule(u64 j, u64 p) noexcept;

// The mixed (p-1, p-1)-th derivative keeps only X^i Y^j with
// i, j = p-1 (mod p), sending c_{ip+p-1, jp+p-1} to X^{ip} Y^{jp}. After the
// p-th root the surviving monomial is X^i Y^j.
struct NablaIndexRule {
  // Output monomial (after the p-th root) that `source` contributes to.
  static std::optional<Monomial> image(Monomial source, u64 p) noexcept;
  // Source index feeding output (i, j) once multiplied by `shift`.
  static std::optional<Monomial> source(Monomial output, Monomial shift, u64 p) noexcept;
};

inline constexpr u64 kDefaultOracleBound = 101;

// Reads H from univariate powers of f truncated at degree 2p - 1.
MatrixFp hasse_witt_fast(const PicardCurve& curve);

// Expands (y^3 - f)^{p-1} bivariately and reads H through the nabla index
// rule. Throws OracleBoundExceeded when p > oracle_bound.
MatrixFp hasse_witt_oracle(const PicardCurve& curve, u64 oracle_bound = kDefaultOracleBound);

// Applies the Cartier operator to each basis differential independently and
// returns the matrix whose column j holds the coordinates of C(z_j).
MatrixFp cartier_matrix(const PicardCurve& curve);

int a_number(const PicardCurve& curve);

// Stable rank of H * H^(s) * H^(s^2), s the Frobenius twist.
int p_rank(const PicardCurve& curve);

struct CurveInvariants {
  MatrixFp hasse_witt;
  int rank_h;
  int a_number;
  int p_rank;
};

CurveInvariants compute_invariants(const PicardCurve& curve);

}  // namespace picard
