#pragma once

#include <array>
#include <string_view>

#include "picard/prime_field.hpp"

namespace picard {

// HasseWitt: row i holds the coordinates attached to basis element z_i, laid
// out like the classical displayed Hasse-Witt matrix.
// Cartier: column j holds the coordinates of C(z_j); the transpose of the
// HasseWitt matrix over a prime field.
enum class Convention { HasseWitt, Cartier };

std::string_view to_string(Convention c) noexcept;

class MatrixFp {
 public:
  static constexpr std::size_t kSize = 3;
  using Rows = std::array<std::array<u64, kSize>, kSize>;

  MatrixFp(const PrimeField& field, Convention convention) noexcept
      : field_(field), convention_(convention), rows_{} {}
  // Entries are reduced mod p.
  MatrixFp(const PrimeField& field, Convention convention, const Rows& rows) noexcept;

  const PrimeField& field() const noexcept { return field_; }
  Convention convention() const noexcept { return convention_; }
  const Rows& rows() const noexcept { return rows_; }

  u64 operator()(std::size_t r, std::size_t c) const noexcept { return rows_[r][c]; }
  FieldElement at(std::size_t r, std::size_t c) const noexcept {
    return FieldElement(field_, rows_[r][c]);
  }
  void set(std::size_t r, std::size_t c, u64 value) noexcept {
    rows_[r][c] = value % field_.modulus();
  }

  bool is_zero() const noexcept;

  // Swaps the convention tag along with the entries.
  MatrixFp transpose() const noexcept;
  // Entrywise p-th power. The identity on prime-field entries, kept explicit
  // so the stable-rank product reads as its general definition.
  MatrixFp frobenius_twist() const noexcept;

  // Product keeps the left operand's convention. Throws UsageError on
  // mismatched fields.
  MatrixFp operator*(const MatrixFp& rhs) const;

  // Entries only; convention tags are compared separately by callers.
  bool same_entries(const MatrixFp& rhs) const noexcept {
    return field_ == rhs.field_ && rows_ == rhs.rows_;
  }
  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  PrimeField field_;
  Convention convention_;
  Rows rows_;
};

// Rank over F_p by exact Gaussian elimination.
int rank_fp(const MatrixFp& m);

}  // namespace picard
