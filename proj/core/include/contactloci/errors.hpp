#pragma once

#include <stdexcept>
#include <string>

namespace contactloci {

/// An enumeration or point-count request exceeded the configured budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A prime at which the arrangement does not reduce faithfully.
struct BadReduction : std::runtime_error {
  explicit BadReduction(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace contactloci
