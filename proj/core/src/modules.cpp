#include <bit>
#include <string>

#include "slater/errors.hpp"
#include "slater/fas_solver.hpp"
#include "slater/tournament.hpp"

namespace slater {

namespace {

std::vector<std::uint64_t> class_mask(std::size_t n, const std::vector<Vertex>& members) {
  std::vector<std::uint64_t> mask((n + 63) / 64, 0);
  for (const auto v : members) mask[v / 64] |= std::uint64_t{1} << (v % 64);
  return mask;
}

std::size_t inner_out_degree(const Tournament& t, Vertex v, const std::vector<std::uint64_t>& mask) {
  const auto row = t.row(v);
  std::size_t d = 0;
  for (std::size_t w = 0; w < row.size(); ++w) d += std::popcount(row[w] & mask[w]);
  return d;
}

bool class_is_transitive(const Tournament& t, const std::vector<Vertex>& members,
                         const std::vector<std::uint64_t>& mask) {
  std::vector<bool> seen(members.size(), false);
  for (const auto v : members) {
    const auto d = inner_out_degree(t, v, mask);
    if (seen[d]) return false;
    seen[d] = true;
  }
  return true;
}

}  // namespace

std::optional<ModuleViolation> find_module_violation(const Tournament& t,
                                                     const ModulePartition& mp) {
  if (mp.vertex_count() != t.size()) {
    throw InvalidInput("module partition covers " + std::to_string(mp.vertex_count()) +
                       " vertices but the tournament has " + std::to_string(t.size()));
  }
  const std::size_t n = t.size();
  for (const auto& members : mp.classes()) {
    if (members.size() < 2) continue;
    const auto mask = class_mask(n, members);
    const Vertex x = members.front();
    const auto row_x = t.row(x);
    for (std::size_t k = 1; k < members.size(); ++k) {
      const Vertex y = members[k];
      const auto row_y = t.row(y);
      for (std::size_t w = 0; w < row_x.size(); ++w) {
        const std::uint64_t diff = (row_x[w] ^ row_y[w]) & ~mask[w];
        if (diff != 0) {
          const auto z = static_cast<Vertex>(w * 64 + std::countr_zero(diff));
          return ModuleViolation{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

Quotient quotient(const Tournament& t, const ModulePartition& mp) {
  return quotient(t, mp, SolverCaps{});
}

Quotient quotient(const Tournament& t, const ModulePartition& mp, const SolverCaps& caps) {
  if (const auto bad = find_module_violation(t, mp)) {
    throw InvalidInput("class of vertex " + std::to_string(bad->x) + " is not a module: " +
                       std::to_string(bad->x) + " and " + std::to_string(bad->y) +
                       " relate differently to " + std::to_string(bad->z));
  }
  const std::size_t k = mp.class_count();
  Quotient q{WeightedDigraph(k), std::vector<Weight>(k, 0)};
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto& mi = mp.members(i);
      const auto& mj = mp.members(j);
      if (t.has_arc(mi.front(), mj.front())) {
        q.graph.set_weight(i, j, static_cast<Weight>(mi.size()) * static_cast<Weight>(mj.size()));
      }
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    const auto& members = mp.members(c);
    if (members.size() < 3) continue;
    if (class_is_transitive(t, members, class_mask(t.size(), members))) continue;
    q.internal_fas[c] = min_fas_dp(t.induced(members), std::nullopt, caps).value;
  }
  return q;
}

}  // namespace slater
