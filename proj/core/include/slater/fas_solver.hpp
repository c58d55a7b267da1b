#pragma once

// Exact minimum feedback arc set and Slater computations.
//
// All solvers break ties lexicographically: the returned order is the
// lexicographically smallest optimal permutation (among those placing
// `forced_last` last, when given), so results are reproducible.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "slater/tournament.hpp"

namespace slater {

struct SolverCaps {
  std::size_t brute_force_nodes = 10;
  std::size_t dp_nodes = 24;
};

enum class SolveMethod { brute_force, subset_dp, module_quotient };

std::string_view to_string(SolveMethod method);

struct SolveResult {
  Weight value = 0;
  LinearOrder order;
  SolveMethod method = SolveMethod::subset_dp;
};

// Enumerates every permutation. Oracle for the other solvers.
SolveResult min_fas_bruteforce(const WeightedDigraph& g,
                               std::optional<Vertex> forced_last = std::nullopt,
                               const SolverCaps& caps = {});
SolveResult min_fas_bruteforce(const Tournament& t,
                               std::optional<Vertex> forced_last = std::nullopt,
                               const SolverCaps& caps = {});

// Dynamic programming over vertex subsets. Orders are built left to right;
// appending x after the already placed set S costs the weight of all arcs
// from x into S.
SolveResult min_fas_dp(const WeightedDigraph& g,
                       std::optional<Vertex> forced_last = std::nullopt,
                       const SolverCaps& caps = {});
SolveResult min_fas_dp(const Tournament& t,
                       std::optional<Vertex> forced_last = std::nullopt,
                       const SolverCaps& caps = {});

// Unconstrained optimum plus, for every node v, the optimum over orders that
// place v last. One subset pass.
struct ForcedLastTable {
  Weight optimum = 0;
  std::vector<Weight> forced_last;
};
ForcedLastTable forced_last_table(const WeightedDigraph& g, const SolverCaps& caps = {});

struct SlaterResult {
  std::vector<Weight> scores;   // per vertex
  Weight min_fas = 0;           // equals the winners' common score
  std::vector<Vertex> winners;  // ascending, never empty for n >= 1
  LinearOrder winning_order;    // optimal order ending in winners.front()
  SolveMethod method = SolveMethod::subset_dp;
};

// Slater scores and winners. With a module partition every class must induce
// a transitive subtournament; the computation then runs on the quotient.
// Module scores keep every class contiguous, so they match the plain scores
// at winners and may exceed them elsewhere; winners and min_fas agree.
SlaterResult slater_winners(const Tournament& t, const SolverCaps& caps = {});
SlaterResult slater_winners(const Tournament& t, const ModulePartition& mp,
                            const SolverCaps& caps = {});

Weight slater_score(const Tournament& t, Vertex v, const SolverCaps& caps = {});
Weight slater_score(const Tournament& t, Vertex v, const ModulePartition& mp,
                    const SolverCaps& caps = {});

bool is_slater_winner(const Tournament& t, Vertex v, const SolverCaps& caps = {});
bool is_slater_winner(const Tournament& t, Vertex v, const ModulePartition& mp,
                      const SolverCaps& caps = {});

// One merge step of contiguize. The left block X ends at x, the right block Y
// starts at y, and the gap Z lies strictly between them. Module members share
// their in/out degrees towards Z.
struct BlockMove {
  std::vector<Vertex> left_block;
  std::vector<Vertex> right_block;
  std::vector<Vertex> gap;
  std::size_t in_degree = 0;   // arcs from Z into any block vertex
  std::size_t out_degree = 0;  // arcs from any block vertex into Z
  Weight left_delta = 0;       // fas change when X moves just after Z
  Weight right_delta = 0;      // fas change when Y moves just before Z
  bool moved_left = true;

  Weight applied_delta() const noexcept { return moved_left ? left_delta : right_delta; }
};

// Rearranges `order` so every class of mp is contiguous without increasing the
// implied fas. Each step merges the closest pair of same-class blocks, moving
// whichever block is cheaper (the left one on ties). Optionally records the
// steps.
LinearOrder contiguize(const Tournament& t, const ModulePartition& mp, const LinearOrder& order,
                       std::vector<BlockMove>* trace = nullptr);

bool is_module_contiguous(const ModulePartition& mp, const LinearOrder& order);

}  // namespace slater
