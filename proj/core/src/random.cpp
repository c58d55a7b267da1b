#include "slater/random.hpp"

#include <algorithm>
#include <limits>

#include "slater/errors.hpp"

namespace slater {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("uniform_below needs a positive bound");
  // Rejection sampling; std::uniform_int_distribution is implementation-defined.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

bool coin(Rng& rng) { return (rng() >> 63) != 0; }

Tournament random_tournament(Rng& rng, std::size_t n) {
  auto t = Tournament::transitive(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) t.orient(v, u);
    }
  }
  return t;
}

WeightedDigraph random_weighted_digraph(Rng& rng, std::size_t k, Weight max_weight) {
  WeightedDigraph g(k);
  const auto span = static_cast<std::uint64_t>(max_weight) + 1;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = 0; v < k; ++v) {
      if (u != v) g.set_weight(u, v, static_cast<Weight>(uniform_below(rng, span)));
    }
  }
  return g;
}

LinearOrder random_order(Rng& rng, std::size_t n) {
  std::vector<Vertex> seq(n);
  for (Vertex v = 0; v < n; ++v) seq[v] = v;
  for (std::size_t i = n; i > 1; --i) std::swap(seq[i - 1], seq[uniform_below(rng, i)]);
  return LinearOrder(std::move(seq));
}

Graph random_graph(Rng& rng, std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

PlantedModules random_planted_modules(Rng& rng, std::size_t n, std::size_t classes,
                                      bool transitive_classes) {
  if (classes == 0 || classes > n) {
    throw InvalidInput("cannot plant " + std::to_string(classes) + " classes in " +
                       std::to_string(n) + " vertices");
  }
  // Random class labels, each class nonempty; vertices keep ascending ids.
  std::vector<std::size_t> label(n);
  for (std::size_t v = 0; v < n; ++v) label[v] = v < classes ? v : uniform_below(rng, classes);
  const auto shuffled = random_order(rng, n);
  std::vector<std::vector<Vertex>> members(classes);
  for (Vertex v = 0; v < n; ++v) members[label[shuffled[v]]].push_back(v);

  const auto quotient = random_tournament(rng, classes);
  std::vector<std::size_t> class_of(n);
  for (std::size_t c = 0; c < classes; ++c) {
    for (const auto v : members[c]) class_of[v] = c;
  }
  auto t = Tournament::transitive(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto cu = class_of[u];
      const auto cv = class_of[v];
      bool reverse = false;
      if (cu != cv) {
        reverse = quotient.has_arc(static_cast<Vertex>(cv), static_cast<Vertex>(cu));
      } else if (!transitive_classes) {
        reverse = coin(rng);
      }
      if (reverse) t.orient(v, u);
    }
  }
  return {std::move(t), ModulePartition(n, std::move(members))};
}

MaxModelInstance random_maxmodel_instance(Rng& rng, std::size_t max_vars,
                                          std::size_t max_clauses) {
  if (max_vars == 0) throw InvalidInput("need at least one variable");
  MaxModelInstance inst;
  const auto n = 1 + uniform_below(rng, max_vars);
  const auto m = uniform_below(rng, max_clauses + 1);
  inst.cnf.num_vars = n;
  for (std::size_t c = 0; c < m; ++c) {
    const auto width = 1 + uniform_below(rng, std::min<std::uint64_t>(3, n));
    const auto vars = random_order(rng, n);
    Clause clause;
    for (std::size_t k = 0; k < width; ++k) {
      const auto v = static_cast<Literal>(vars[k] + 1);
      clause.push_back(coin(rng) ? v : -v);
    }
    // Force a negative literal so the all-False assignment stays a model.
    const auto neg = uniform_below(rng, width);
    if (clause[neg] > 0) clause[neg] = -clause[neg];
    inst.cnf.clauses.push_back(std::move(clause));
  }
  inst.dvar = 1 + uniform_below(rng, n);
  return inst;
}

}  // namespace slater
