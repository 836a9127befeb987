#include "spcob/report.hpp"

namespace spcob {

Json to_json(const Report& r) {
  Json j = {{"check", r.check}, {"params", r.params}, {"pass", r.pass}};
  if (!r.witness.is_null()) j["witness"] = r.witness;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Report run_check(const std::string& name, Json params,
                 const std::function<CheckOutcome()>& body) {
  Report report;
  report.check = name;
  report.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  report.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                            std::chrono::steady_clock::now() - start)
                                            .count());
  report.pass = outcome.pass;
  Json stats = Json::object();
  for (const auto& [key, value] : outcome.stats) stats[key] = stats.value(key, 0L) + value;
  if (!outcome.pass) {
    report.witness = {{"failure", outcome.witness}, {"stats", stats}};
  } else if (!outcome.note.empty() || !stats.empty()) {
    report.witness = {{"stats", stats}};
  }
  if (!outcome.note.empty()) report.witness["note"] = outcome.note;
  return report;
}

}  // namespace spcob
