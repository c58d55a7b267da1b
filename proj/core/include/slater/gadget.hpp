#pragma once

// Max Model -> Slater winner gadget tournaments.
//
// For a formula with n variables and m clauses the tournament has one section
// of six modules A_i..F_i per variable and one clause module T_j per clause,
// laid out in ascending vertex ids as A_1 B_1 C_1 D_1 E_1 F_1 A_2 ... F_n
// T_1 ... T_m. Modules are internally transitive with arcs u -> v for u < v.
// Within a section the arcs follow A -> B -> C -> {D, E, F} transitively,
// except that D -> E -> F -> D is a 3-cycle. Sections point to later sections,
// and T_j -> T_j' for j < j'. The designated vertex is the sink of F_n.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "slater/fas_solver.hpp"
#include "slater/formulas.hpp"
#include "slater/tournament.hpp"

namespace slater {

using BigInt = boost::multiprecision::cpp_int;

struct ReductionParams {
  std::size_t n = 0;  // variables
  std::size_t m = 0;  // clauses
  BigInt s1;          // large module size
  BigInt s2;          // clause module size

  friend bool operator==(const ReductionParams&, const ReductionParams&) = default;
};

// slack[k] = lhs - rhs of inequality k+1; the inequality holds iff slack > 0.
//   (1) s1^2     > (3n-1)m s1 s2 + 3n s1 + m^2 s2^2 + 9m(n-1) s2
//   (2) s1 s2    > 3n s1 + m^2 s2^2 + 9m(n-1) s2
//   (3) s1       > m^2 s2^2 + 9m(n-1) s2
struct ParamCheck {
  bool ok = false;
  std::array<BigInt, 3> slack;

  // 1-based index of the first failing inequality, 0 if none fails.
  int first_failure() const;
};

ParamCheck check_params(const ReductionParams& p);

// Feasible (s1, s2) minimising the vertex count 6n s1 + 2n + 1 + m s2,
// preferring the smaller s2 on ties.
ReductionParams find_min_params(std::size_t n, std::size_t m);

// s2 = (n+m)^5, s1 = s2^5.
ReductionParams polynomial_params(std::size_t n, std::size_t m);

BigInt gadget_vertex_count(const ReductionParams& p);

enum class ModuleKind : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', T = 'T' };

struct GadgetModule {
  ModuleKind kind = ModuleKind::A;
  std::size_t index = 0;  // 1-based variable (A..F) or clause (T) number
  VertexRange range;

  std::string name() const;  // e.g. "D_2", "T_1"
};

inline constexpr std::size_t kMaterializeCap = 32768;

class GadgetLayout {
 public:
  const ReductionParams& params() const noexcept { return params_; }
  const MaxModelInstance& source() const noexcept { return source_; }
  const std::vector<GadgetModule>& modules() const noexcept { return modules_; }
  // Module-level relation: arc (i, j) iff all arcs between modules i and j
  // point from i to j.
  const Tournament& module_tournament() const noexcept { return module_tournament_; }
  Vertex designated() const noexcept { return designated_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }

  std::size_t variable_count() const noexcept { return params_.n; }
  std::size_t clause_count() const noexcept { return params_.m; }

  // Module indices; var and clause are 1-based.
  std::size_t section_module(std::size_t var, ModuleKind kind) const;
  std::size_t clause_module(std::size_t clause) const;

  ModulePartition partition() const;
  WeightedDigraph quotient() const;

  // Vertex-level tournament. Throws CapExceeded above vertex_cap vertices.
  Tournament materialize(std::size_t vertex_cap = kMaterializeCap) const;

 private:
  friend GadgetLayout build_gadget(const MaxModelInstance&, const ReductionParams&);

  ReductionParams params_;
  MaxModelInstance source_;
  std::vector<GadgetModule> modules_;
  Tournament module_tournament_;
  Vertex designated_ = 0;
  std::size_t vertex_count_ = 0;
};

// Swaps the distinguished variable with the last variable.
struct ReindexedInstance {
  MaxModelInstance instance;
  std::vector<std::size_t> var_map;  // var_map[v - 1] = new index of variable v
};
ReindexedInstance reindex_dvar_last(const MaxModelInstance& inst);
PartitionedCnf reindex_dvar_last(const PartitionedCnf& pcnf);

// Builds the gadget without checking the size inequalities. Requires
// p.n == num_vars, p.m == clause count, dvar == n, no clause repeating a
// variable, and s1, s2 >= 1.
GadgetLayout build_gadget(const MaxModelInstance& inst, const ReductionParams& p);

// build_gadget after check_params; throws InvalidInput naming the first
// violated inequality.
GadgetLayout cnf_to_tournament(const MaxModelInstance& inst, const ReductionParams& p);

// x_i is True iff D_i, E_i, F_i appear in that relative order.
Assignment ordering_to_assignment(const GadgetLayout& layout, const LinearOrder& module_order);

struct GadgetOrdering {
  LinearOrder order;  // over modules
  Weight fas = 0;     // weighted quotient fas
  BigInt bound;       // assignment_bound for the assignment
};

// Sections ascending; A B C D E F for True variables and A B C E F D for False
// ones; each T_j immediately before the last module of the section of the
// smallest variable whose literal satisfies clause j, co-located T's by j.
// Throws InvalidInput if a does not satisfy the source formula.
GadgetOrdering assignment_to_ordering(const GadgetLayout& layout, const Assignment& a);

// n s1^2 + 2(n-k) s1 + [x_n False] s1 + (3n-1)m s1 s2 + m^2 s2^2 + 9m(n-1) s2,
// with k the weight of a.
BigInt assignment_bound(const ReductionParams& p, const Assignment& a);
// n s1^2 + (3n-1)m s1 s2 + 3n s1 + m^2 s2^2 + 9m(n-1) s2.
BigInt baseline_bound(const ReductionParams& p);
// n s1^2: every section pays for one arc set of its D/E/F cycle.
BigInt quotient_lower_bound(const ReductionParams& p);

// Describes the first way `module_order` departs from the shape every optimal
// order must have: sections in index order, A_i B_i C_i first in their
// section, and D_i E_i F_i in one of the three rotations.
std::optional<std::string> structure_violation(const GadgetLayout& layout,
                                               const LinearOrder& module_order);

// Builds the gadget and decides whether its designated vertex is a Slater
// winner, using the module partition. dvar must be the last variable.
bool decide_designated(const MaxModelInstance& inst, const ReductionParams& p,
                       const SolverCaps& caps = {});

}  // namespace slater
