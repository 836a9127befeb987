#include "spcob/linalg.hpp"

#include <utility>

namespace spcob {

namespace {

struct Echelon {
  IntMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

// Bareiss elimination to row echelon form. Every division is exact.
Echelon bareiss(IntMatrix a) {
  Echelon out;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Integer previous = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = pivot_row;
    while (found < rows && a(found, col) == 0) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(found, j), a(pivot_row, j));
    }
    const Integer pivot = a(pivot_row, col);
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      const Integer factor = a(i, col);
      for (std::size_t j = col; j < cols; ++j) {
        Integer v = pivot * a(i, j) - factor * a(pivot_row, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = v;
      }
    }
    // Entries to the left of col in the pivot row were already zero.
    previous = pivot;
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(a);
  return out;
}

}  // namespace

std::size_t rank(const IntMatrix& m) { return bareiss(m).pivot_cols.size(); }

std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m) {
  const Echelon ech = bareiss(m);
  const std::size_t cols = m.cols();
  const std::size_t k = ech.pivot_cols.size();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    // Back-substitute with rational arithmetic kept as a common denominator.
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t idx = k; idx-- > 0;) {
      const std::size_t pc = ech.pivot_cols[idx];
      mpq_class acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (ech.reduced(idx, j) != 0) acc += mpq_class(ech.reduced(idx, j)) * v[j];
      }
      v[pc] = -acc / mpq_class(ech.reduced(idx, pc));
    }
    Integer denom = 1;
    for (const auto& q : v) {
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<Integer> row(cols);
    Integer g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class scaled = v[j] * mpq_class(denom);
      row[j] = scaled.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    }
    if (g > 1) {
      for (auto& x : row) x /= g;
    }
    basis.push_back(std::move(row));
  }
  return basis;
}

}  // namespace spcob
