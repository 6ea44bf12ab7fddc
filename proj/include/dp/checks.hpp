#pragma once

#include <string>
#include <vector>

#include "dp/duality.hpp"

namespace dp {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

enum class Suite { Axioms, Duality, Free, All };

Suite parse_suite(const std::string& name);

/// Runs the property suite(s) at desk scale; one entry per check.
std::vector<CheckResult> run_checks(Suite suite);

/// Every nonempty object with at most `max_instances` chains, each of
/// length at most `max_length`, in a fixed order.
std::vector<MultisetObj> small_objects(std::uint32_t max_instances, std::uint32_t max_length);

}  // namespace dp
