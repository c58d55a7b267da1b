#pragma once

// Seeded instance generators. Only mt19937_64's output sequence is relied on,
// so the same seed yields the same instances on every platform.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "slater/formulas.hpp"
#include "slater/tournament.hpp"

namespace slater {

using Rng = std::mt19937_64;

// Uniform in [0, bound), bound >= 1.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
bool coin(Rng& rng);

Tournament random_tournament(Rng& rng, std::size_t n);
WeightedDigraph random_weighted_digraph(Rng& rng, std::size_t k, Weight max_weight);
LinearOrder random_order(Rng& rng, std::size_t n);
Graph random_graph(Rng& rng, std::size_t n);

struct PlantedModules {
  Tournament tournament;
  ModulePartition partition;
};

// Random tournament on n vertices with a planted partition into `classes`
// modules. Class internals are random, or transitive (arcs u -> v for u < v)
// when requested.
PlantedModules random_planted_modules(Rng& rng, std::size_t n, std::size_t classes,
                                      bool transitive_classes);

// Random all-False-satisfiable instance: every clause carries at least one
// negative literal, and no clause repeats a variable.
MaxModelInstance random_maxmodel_instance(Rng& rng, std::size_t max_vars, std::size_t max_clauses);

}  // namespace slater
