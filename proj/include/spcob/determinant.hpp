#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "spcob/integer.hpp"

namespace spcob {

template <class R>
using Grid = std::vector<std::vector<R>>;

/// Determinant by cofactor expansion along successive rows, memoizing each
/// minor by the set of columns still in play. The memo lives for one call.
/// Grids are desk-scale (at most ~20 columns for the bitmask).
///
/// R needs +, -, * and is_zero(); `zero` and `one` seed the recursion.
template <class R>
R laplace_determinant(const Grid<R>& m, const R& zero, const R& one) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw DomainError("determinant of a non-square grid");
  }
  if (n > 24) throw DomainError("determinant: grid too large for cofactor expansion");
  if (n == 0) return one;

  std::unordered_map<std::uint32_t, R> memo;
  // minor(mask) = determinant of rows [n - popcount(mask), n) against the
  // columns in mask.
  auto minor = [&](auto&& self, std::uint32_t mask) -> R {
    const int remaining = __builtin_popcount(mask);
    if (remaining == 0) return one;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(remaining);
    R total = zero;
    int position = 0;
    for (std::size_t col = 0; col < n; ++col) {
      if (!(mask & (1u << col))) continue;
      const R& entry = m[row][col];
      if (!entry.is_zero()) {
        R term = entry * self(self, mask & ~(1u << col));
        if (position % 2 == 0) {
          total = total + term;
        } else {
          total = total - term;
        }
      }
      ++position;
    }
    memo.emplace(mask, total);
    return total;
  };
  return minor(minor, (1u << n) - 1);
}

}  // namespace spcob
