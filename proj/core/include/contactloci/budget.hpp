#pragma once

#include <cstdint>

namespace contactloci {

/// Guardrails for the enumeration- and counting-heavy entry points.
///
/// The environment variable CONTACTLOCI_BUDGET (a positive integer, counted
/// in evaluations) overrides both max_descriptors and max_evaluations.
struct Budgets {
  int max_poset_hyperplanes = 20;
  long max_m = 64;
  std::int64_t max_descriptors = 1'000'000;
  std::int64_t max_evaluations = 100'000'000;
};

Budgets current_budgets();

}  // namespace contactloci
