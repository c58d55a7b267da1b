#include <string>

#include "slater/errors.hpp"
#include "slater/fas_solver.hpp"

namespace slater {

namespace {

void require_vertex(const Tournament& t, Vertex v) {
  if (v >= t.size()) {
    throw InvalidInput("vertex " + std::to_string(v) + " not in 0.." + std::to_string(t.size()) +
                       "-1");
  }
}

void collect_winners(SlaterResult& r) {
  for (Vertex v = 0; v < r.scores.size(); ++v) {
    if (r.scores[v] == r.min_fas) r.winners.push_back(v);
  }
}

}  // namespace

SlaterResult slater_winners(const Tournament& t, const SolverCaps& caps) {
  if (t.size() > caps.dp_nodes) {
    throw CapExceeded("tournament has " + std::to_string(t.size()) +
                      " candidates; exact Slater without modules supports at most " +
                      std::to_string(caps.dp_nodes));
  }
  const auto g = WeightedDigraph::from_tournament(t);
  const auto table = forced_last_table(g, caps);
  SlaterResult r;
  r.scores = table.forced_last;
  r.min_fas = table.optimum;
  r.method = SolveMethod::subset_dp;
  collect_winners(r);
  if (!r.winners.empty()) r.winning_order = min_fas_dp(g, r.winners.front(), caps).order;
  return r;
}

SlaterResult slater_winners(const Tournament& t, const ModulePartition& mp,
                            const SolverCaps& caps) {
  const auto q = quotient(t, mp, caps);
  const std::size_t k = mp.class_count();
  if (k > caps.dp_nodes) {
    throw CapExceeded("module partition has " + std::to_string(k) +
                      " classes; the quotient solver supports at most " +
                      std::to_string(caps.dp_nodes));
  }
  // Internal order of each (transitive) class, source first.
  std::vector<std::vector<Vertex>> internal(k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto& members = mp.members(c);
    const auto order = transitive_order(t.induced(members));
    if (!order) {
      throw InvalidInput("class " + std::to_string(c) +
                         " does not induce a transitive subtournament");
    }
    for (const auto local : *order) internal[c].push_back(members[local]);
  }

  const auto table = forced_last_table(q.graph, caps);
  SlaterResult r;
  r.method = SolveMethod::module_quotient;
  r.min_fas = table.optimum;
  r.scores.assign(t.size(), 0);
  for (std::size_t c = 0; c < k; ++c) {
    const auto size = static_cast<Weight>(internal[c].size());
    for (Weight rank = 0; rank < size; ++rank) {
      // Forcing the vertex of internal rank r to the end of its module
      // reverses the arcs to the size-1-r members ranked above it.
      r.scores[internal[c][rank]] = table.forced_last[c] + (size - 1 - rank);
    }
  }
  collect_winners(r);
  if (!r.winners.empty()) {
    const auto modules =
        min_fas_dp(q.graph, static_cast<Vertex>(mp.class_of(r.winners.front())), caps).order;
    std::vector<Vertex> seq;
    seq.reserve(t.size());
    for (const auto c : modules) seq.insert(seq.end(), internal[c].begin(), internal[c].end());
    r.winning_order = LinearOrder(std::move(seq));
  }
  return r;
}

Weight slater_score(const Tournament& t, Vertex v, const SolverCaps& caps) {
  require_vertex(t, v);
  return slater_winners(t, caps).scores[v];
}

Weight slater_score(const Tournament& t, Vertex v, const ModulePartition& mp,
                    const SolverCaps& caps) {
  require_vertex(t, v);
  return slater_winners(t, mp, caps).scores[v];
}

bool is_slater_winner(const Tournament& t, Vertex v, const SolverCaps& caps) {
  require_vertex(t, v);
  const auto r = slater_winners(t, caps);
  return r.scores[v] == r.min_fas;
}

bool is_slater_winner(const Tournament& t, Vertex v, const ModulePartition& mp,
                      const SolverCaps& caps) {
  require_vertex(t, v);
  const auto r = slater_winners(t, mp, caps);
  return r.scores[v] == r.min_fas;
}

}  // namespace slater
