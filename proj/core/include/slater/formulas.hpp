#pragma once

// CNF formulas, Max Model instances, graphs, and the brute-force oracles that
// anchor verification. Variables are 1-based (DIMACS); a literal is a signed
// variable index.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slater/tournament.hpp"

namespace slater {

using Literal = int;
using Clause = std::vector<Literal>;

struct Cnf {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  // Throws InvalidInput on an out-of-range literal or a clause of size 0 or > 3.
  void validate() const;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

struct Assignment {
  std::vector<bool> bits;  // bits[v - 1] is the value of variable v

  Assignment() = default;
  explicit Assignment(std::size_t num_vars, bool value = false) : bits(num_vars, value) {}
  static Assignment from_mask(std::size_t num_vars, std::uint64_t mask);

  std::size_t size() const noexcept { return bits.size(); }
  bool operator[](std::size_t var) const { return bits.at(var - 1); }
  void set(std::size_t var, bool value) { bits.at(var - 1) = value; }
  bool satisfies(Literal lit) const;
  std::size_t weight() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

bool evaluate(const Cnf& cnf, const Assignment& a);

// Satisfiable CNF whose all-False assignment is a model, with a distinguished
// variable.
struct MaxModelInstance {
  Cnf cnf;
  std::size_t dvar = 1;

  void validate() const;

  friend bool operator==(const MaxModelInstance&, const MaxModelInstance&) = default;
};

enum class Side : char { L = 'L', R = 'R' };

struct PartitionedCnf {
  MaxModelInstance instance;
  std::vector<Side> sides;  // one per clause

  // Each literal occurs in at most one clause of L and at most one of R.
  void validate() const;
  // Each variable occurs in at most one clause of L.
  bool variable_once_in_left() const;

  friend bool operator==(const PartitionedCnf&, const PartitionedCnf&) = default;
};

struct MaxModelResult {
  bool decision = false;  // some maximum-weight model sets dvar True
  std::size_t max_weight = 0;
  Assignment witness;
};

inline constexpr std::size_t kMaxModelVarCap = 26;

// Enumerates all assignments. The witness is the first maximum-weight model in
// ascending mask order, preferring one with dvar True.
MaxModelResult max_model_decide(const MaxModelInstance& inst,
                                std::size_t var_cap = kMaxModelVarCap);

struct Graph {
  std::size_t n = 0;
  std::set<std::pair<Vertex, Vertex>> edges;  // stored with first < second

  Graph() = default;
  explicit Graph(std::size_t vertices) : n(vertices) {}
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

struct IndependentSetParity {
  std::size_t max_size = 0;
  bool odd = false;
};

inline constexpr std::size_t kIndependentSetCap = 20;

IndependentSetParity max_independent_set_parity(const Graph& g,
                                                std::size_t cap = kIndependentSetCap);

}  // namespace slater
