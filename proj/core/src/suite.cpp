#include "slater/suite.hpp"

namespace slater {

namespace {

NamedInstance make(std::string name, std::size_t num_vars, std::vector<Clause> clauses) {
  return {std::move(name), MaxModelInstance{Cnf{num_vars, std::move(clauses)}, num_vars}};
}

}  // namespace

std::vector<NamedInstance> bundled_suite() {
  return {
      make("unit-free", 1, {}),
      make("unit-negated", 1, {{-1}}),
      make("implication", 2, {{-1, 2}}),
      make("implication-blocked", 2, {{-1, 2}, {-2}}),
      make("exclusion", 2, {{-1, -2}}),
      make("exclusion-free-other", 2, {{-2}}),
      make("exclusion-pair", 2, {{-1, -2}, {-2, 1}}),
      make("three-exclusion", 3, {{-1, -3}, {-2, -3}}),
      make("three-chain", 3, {{-1, -2}, {-2, 3}}),
      make("three-wide", 3, {{-1, -2, -3}}),
      make("three-mixed", 3, {{-1, 2, -3}, {-2, -3}, {-1, 3}}),
      make("three-forced", 3, {{-3, 1}, {-3, 2}, {-1, -2}}),
  };
}

}  // namespace slater
