#include "contactloci/budget.hpp"

#include <cstdlib>
#include <string>

namespace contactloci {

Budgets current_budgets() {
  Budgets b;
  if (const char* env = std::getenv("CONTACTLOCI_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) {
        b.max_descriptors = v;
        b.max_evaluations = v;
      }
    } catch (const std::exception&) {
      // unparsable values keep the defaults
    }
  }
  return b;
}

}  // namespace contactloci
