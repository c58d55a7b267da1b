#pragma once

#include <string>
#include <vector>

#include "slater/formulas.hpp"

namespace slater {

struct NamedInstance {
  std::string name;
  MaxModelInstance instance;  // dvar is the last variable
};

// Desk-scale Max Model instances (n <= 3 variables, m <= 3 clauses) used for
// end-to-end checks of the gadget reduction.
std::vector<NamedInstance> bundled_suite();

}  // namespace slater
