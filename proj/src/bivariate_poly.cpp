#include "picard/bivariate_poly.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "picard/errors.hpp"

namespace picard {

namespace {

constexpr std::uint64_t kDenseAccumulatorLimit = std::uint64_t{1} << 24;

std::uint64_t pack(Monomial m) noexcept {
  return (std::uint64_t{m.x} << 32) | m.y;
}

Monomial unpack(std::uint64_t key) noexcept {
  return {static_cast<std::uint32_t>(key >> 32), static_cast<std::uint32_t>(key)};
}

void require_same_field(const BivariatePoly& a, const BivariatePoly& b) {
  if (!(a.field() == b.field())) throw UsageError("bivariate polynomials over different fields");
}

}  // namespace

BivariatePoly BivariatePoly::lift(const DensePoly& f) {
  BivariatePoly out(f.field());
  const auto c = f.residues();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) out.terms_.emplace_hint(out.terms_.end(), Monomial{static_cast<std::uint32_t>(i), 0}, c[i]);
  }
  return out;
}

BivariatePoly BivariatePoly::monomial(const PrimeField& field, u64 coefficient, Monomial m) {
  BivariatePoly out(field);
  out.add_term(m, coefficient % field.modulus());
  return out;
}

FieldElement BivariatePoly::coeff(Monomial m) const noexcept {
  return FieldElement(field_, coeff_residue(m));
}

u64 BivariatePoly::coeff_residue(Monomial m) const noexcept {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

DensePoly BivariatePoly::y_slice(std::uint32_t y_degree) const {
  std::vector<u64> residues;
  for (const auto& [m, c] : terms_) {
    if (m.y != y_degree) continue;
    if (residues.size() <= m.x) residues.resize(m.x + 1, 0);
    residues[m.x] = c;
  }
  return DensePoly::from_residues(field_, std::move(residues));
}

void BivariatePoly::add_term(Monomial m, u64 residue) {
  if (residue == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, residue);
  if (inserted) return;
  it->second = field_.add(it->second, residue);
  if (it->second == 0) terms_.erase(it);
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& rhs) const {
  require_same_field(*this, rhs);
  BivariatePoly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
  return out;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& rhs) const {
  require_same_field(*this, rhs);
  BivariatePoly out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term(m, field_.neg(c));
  return out;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& rhs) const {
  require_same_field(*this, rhs);
  BivariatePoly out(field_);
  if (is_zero() || rhs.is_zero()) return out;

  const u64 p = field_.modulus();
  std::uint64_t max_x = 0, max_y = 0;
  for (const auto* side : {&terms_, &rhs.terms_}) {
    std::uint32_t mx = 0, my = 0;
    for (const auto& [m, c] : *side) {
      mx = std::max(mx, m.x);
      my = std::max(my, m.y);
    }
    max_x += mx;
    max_y += my;
  }

  // Accumulate into a dense grid when it is small enough, else a hash map.
  const std::uint64_t width = max_y + 1;
  const std::uint64_t cells = (max_x + 1) * width;
  if (cells <= kDenseAccumulatorLimit) {
    std::vector<u64> grid(cells, 0);
    for (const auto& [ml, cl] : terms_) {
      for (const auto& [mr, cr] : rhs.terms_) {
        u64& slot = grid[(std::uint64_t{ml.x} + mr.x) * width + ml.y + mr.y];
        const u64 s = slot + (cl * cr) % p;
        slot = s >= p ? s - p : s;
      }
    }
    for (std::uint64_t k = 0; k < cells; ++k) {
      if (grid[k] != 0) {
        out.terms_.emplace_hint(out.terms_.end(),
                                Monomial{static_cast<std::uint32_t>(k / width),
                                         static_cast<std::uint32_t>(k % width)},
                                grid[k]);
      }
    }
    return out;
  }

  std::unordered_map<std::uint64_t, u64> acc;
  acc.reserve(terms_.size() + rhs.terms_.size());
  for (const auto& [ml, cl] : terms_) {
    const std::uint64_t key = pack(ml);
    for (const auto& [mr, cr] : rhs.terms_) {
      // Exponents stay far below 2^32, so packed keys add without carries.
      u64& slot = acc[key + pack(mr)];
      const u64 s = slot + (cl * cr) % p;
      slot = s >= p ? s - p : s;
    }
  }
  for (const auto& [key, c] : acc) {
    if (c != 0) out.terms_.emplace(unpack(key), c);
  }
  return out;
}

BivariatePoly pow(const BivariatePoly& f, u64 exponent) {
  BivariatePoly result = BivariatePoly::monomial(f.field(), 1, {0, 0});
  BivariatePoly base = f;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

}  // namespace picard
