#pragma once

#include <chrono>
#include <functional>
#include <string>

#include "spcob/check.hpp"
#include "spcob/json_io.hpp"

namespace spcob {

/// Machine-readable outcome of one CLI verification or computation.
struct Report {
  std::string check;
  Json params = Json::object();
  bool pass = true;
  Json witness;  // null when absent; always set when pass is false
  long elapsed_ms = 0;
};

Json to_json(const Report& r);

/// Runs `body` and fills timing; a CheckOutcome failure becomes the witness.
Report run_check(const std::string& name, Json params,
                 const std::function<CheckOutcome()>& body);

}  // namespace spcob
