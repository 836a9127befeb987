#pragma once

#include <string>
#include <utility>
#include <vector>

namespace spcob {

/// Result of a finite verification. On failure `witness` describes the first
/// counterexample; `stats` records what was enumerated.
struct CheckOutcome {
  bool pass = true;
  std::string witness;
  std::string note;
  std::vector<std::pair<std::string, long>> stats;

  void fail(std::string why) {
    if (pass) witness = std::move(why);
    pass = false;
  }
  void stat(std::string key, long value) { stats.emplace_back(std::move(key), value); }
  void absorb(const CheckOutcome& other) {
    if (!other.pass) fail(other.witness);
    if (!other.note.empty()) note += (note.empty() ? "" : "; ") + other.note;
    stats.insert(stats.end(), other.stats.begin(), other.stats.end());
  }
};

}  // namespace spcob
