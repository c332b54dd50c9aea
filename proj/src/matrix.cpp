#include "picard/matrix.hpp"

#include <utility>

#include "picard/errors.hpp"

namespace picard {

std::string_view to_string(Convention c) noexcept {
  return c == Convention::HasseWitt ? "HasseWitt" : "Cartier";
}

MatrixFp::MatrixFp(const PrimeField& field, Convention convention, const Rows& rows) noexcept
    : field_(field), convention_(convention), rows_(rows) {
  for (auto& row : rows_) {
    for (auto& v : row) v %= field_.modulus();
  }
}

bool MatrixFp::is_zero() const noexcept {
  for (const auto& row : rows_) {
    for (const u64 v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

MatrixFp MatrixFp::transpose() const noexcept {
  MatrixFp out(field_, convention_ == Convention::HasseWitt ? Convention::Cartier
                                                            : Convention::HasseWitt);
  for (std::size_t r = 0; r < kSize; ++r) {
    for (std::size_t c = 0; c < kSize; ++c) out.rows_[c][r] = rows_[r][c];
  }
  return out;
}

MatrixFp MatrixFp::frobenius_twist() const noexcept {
  MatrixFp out(field_, convention_);
  const u64 p = field_.modulus();
  for (std::size_t r = 0; r < kSize; ++r) {
    for (std::size_t c = 0; c < kSize; ++c) out.rows_[r][c] = field_.pow(rows_[r][c], p);
  }
  return out;
}

MatrixFp MatrixFp::operator*(const MatrixFp& rhs) const {
  if (!(field_ == rhs.field_)) throw UsageError("matrix product over different fields");
  MatrixFp out(field_, convention_);
  for (std::size_t r = 0; r < kSize; ++r) {
    for (std::size_t c = 0; c < kSize; ++c) {
      u64 acc = 0;
      for (std::size_t k = 0; k < kSize; ++k) {
        acc = field_.add(acc, field_.mul(rows_[r][k], rhs.rows_[k][c]));
      }
      out.rows_[r][c] = acc;
    }
  }
  return out;
}

int rank_fp(const MatrixFp& m) {
  const PrimeField& field = m.field();
  MatrixFp::Rows a = m.rows();
  constexpr std::size_t n = MatrixFp::kSize;
  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < n; ++col) {
    std::size_t pivot = pivot_row;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(a[pivot], a[pivot_row]);
    const u64 inv = field.inv(a[pivot_row][col]);
    for (std::size_t r = pivot_row + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const u64 factor = field.mul(a[r][col], inv);
      for (std::size_t c = col; c < n; ++c) {
        a[r][c] = field.sub(a[r][c], field.mul(factor, a[pivot_row][c]));
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace picard
