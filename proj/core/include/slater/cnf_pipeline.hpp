#pragma once

// CNF-level reductions: graph -> Max Model with a parity-tracking
// distinguished variable, and Max Model -> L/R-partitioned Max Model where
// every literal occurs at most once per side.

#include <cstddef>
#include <string>
#include <vector>

#include "slater/formulas.hpp"

namespace slater {

struct GraphReduction {
  MaxModelInstance instance;
  std::vector<std::string> variable_names;  // index v-1, e.g. "x_2^3", "y_1"
};

// Variables: x_i^j = (i-1)(n+1) + j for j in 1..n+1, then y_i = n(n+1) + i.
// Clauses in order: copy equalities (one implication per ordered pair j != k),
// edge exclusions, then the parity chain y_1 = x_1^1, y_i = y_{i-1} xor x_i^1.
// The distinguished variable is y_n.
GraphReduction graph_to_maxmodel(const Graph& g);

struct RestrictedReduction {
  PartitionedCnf pcnf;
  std::size_t copies = 0;                   // m, the input clause count
  std::vector<std::string> variable_names;  // "y_i^j"
  std::vector<std::size_t> origin;          // per L clause, source clause index
};

// Variables y_i^j = (i-1)m + j. R holds the implication cycle over each
// variable's m copies (omitted when m = 1); L holds the input clauses with
// x_i in clause j renamed to y_i^j. Throws InvalidInput if the input has no
// clauses or a clause repeats a variable.
RestrictedReduction maxmodel_to_restricted(const MaxModelInstance& inst);

}  // namespace slater
