#pragma once

#include <cstddef>
#include <vector>

#include "spcob/integer.hpp"

namespace spcob {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Rank over Q using Bareiss fraction-free elimination.
std::size_t rank(const IntMatrix& m);

/// Primitive integer basis of the rational null space {v : m v = 0}.
std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m);

}  // namespace spcob
