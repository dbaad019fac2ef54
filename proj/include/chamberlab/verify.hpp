#pragma once

// The acceptance suite: twelve exhaustive checks over the shipped
// structures, each with a pinned wall-time budget.

#include <string>
#include <vector>

#include "json.hpp"

namespace chamberlab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  // 0 means no time budget.
  double limit_seconds = 0.0;
  std::string detail;
  nlohmann::json data;
};

constexpr int kCriterionCount = 12;

// Runs one criterion (1-based). Exceptions inside a criterion are caught and
// turned into a failing result.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

nlohmann::json to_json(const CriterionResult& r);

}  // namespace chamberlab
