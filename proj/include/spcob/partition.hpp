#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace spcob {

/// A weakly decreasing sequence of positive integers. The empty partition
/// indexes the unit s_() = 1.
class Partition {
 public:
  Partition() = default;

  /// Trailing zeros are stripped; anything else that is not weakly
  /// decreasing and nonnegative throws DomainError.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// i-th part, 0-based; zero past the end.
  int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

int weight(const Partition& lambda);

/// Partitions with at most r parts and largest part at most m, ordered by
/// weight and then lexicographically descending. There are C(r+m, r) of them.
std::vector<Partition> enumerate_box(int r, int m);

/// All partitions of `total` with at most `max_parts` parts, lexicographically
/// descending.
std::vector<Partition> partitions_of(int total, int max_parts);

/// (mu_1+1, ..., mu_r+1) after padding mu with zeros to length r.
Partition add_full_column(const Partition& mu, int r);

/// Inverse of add_full_column: requires exactly r parts.
Partition remove_full_column(const Partition& lambda, int r);

/// Parses "3,1" or "" into a partition.
Partition parse_partition(const std::string& text);

}  // namespace spcob
