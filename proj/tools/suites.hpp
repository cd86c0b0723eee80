#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace galg::suites {

struct CheckResult {
  int id = 0;
  std::string title;
  int cases = 0;
  int failures = 0;
  io::json details = io::json::object();
  io::json witness;  // first failing instance, replayable

  bool passed() const { return cases > 0 && failures == 0; }
};

constexpr int kCriteria = 10;

std::string criterion_title(int id);
CheckResult run_criterion(int id, std::uint64_t seed, const Budget& budget);

const std::vector<std::string>& suite_names();
// Criteria driven by a named suite; throws std::invalid_argument for unknown names.
std::vector<int> suite_criteria(const std::string& name);

io::json to_json(const CheckResult& r);

}  // namespace galg::suites
