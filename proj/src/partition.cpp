#include "spcob/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spcob/integer.hpp"

namespace spcob {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw DomainError("partition parts must be positive: " + to_string());
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition must be weakly decreasing: " + to_string());
    }
  }
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int part : lambda.parts()) {
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

int weight(const Partition& lambda) {
  return std::accumulate(lambda.parts().begin(), lambda.parts().end(), 0);
}

namespace {

// Appends every partition of `remaining` with parts <= cap and at most
// `slots` further parts, in lexicographically descending order.
void fill(int remaining, int cap, int slots, std::vector<int>& prefix,
          std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0) return;
  for (int part = std::min(cap, remaining); part >= 1; --part) {
    prefix.push_back(part);
    fill(remaining - part, part, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int total, int max_parts) {
  std::vector<Partition> out;
  if (total < 0 || max_parts < 0) return out;
  std::vector<int> prefix;
  fill(total, total, max_parts, prefix, out);
  return out;
}

std::vector<Partition> enumerate_box(int r, int m) {
  std::vector<Partition> out;
  if (r < 0 || m < 0) return out;
  for (int w = 0; w <= r * m; ++w) {
    std::vector<int> prefix;
    fill(w, m, r, prefix, out);
  }
  return out;
}

Partition add_full_column(const Partition& mu, int r) {
  if (mu.length() > r) {
    throw DomainError("add_full_column: " + mu.to_string() + " has more than " +
                      std::to_string(r) + " parts");
  }
  std::vector<int> parts(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) parts[static_cast<std::size_t>(i)] = mu[i] + 1;
  return Partition(std::move(parts));
}

Partition remove_full_column(const Partition& lambda, int r) {
  if (lambda.length() != r) {
    throw DomainError("remove_full_column: " + lambda.to_string() +
                      " does not have exactly " + std::to_string(r) + " parts");
  }
  std::vector<int> parts = lambda.parts();
  for (int& p : parts) --p;
  return Partition(std::move(parts));
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  if (std::all_of(text.begin(), text.end(), ::isspace)) return Partition();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw DomainError("empty part in '" + text + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad partition part '" + item + "'");
    }
    if (used != item.size()) throw DomainError("bad partition part '" + item + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

}  // namespace spcob
