// Seeded property tests over random instances.

#include <gtest/gtest.h>

#include <functional>

#include "slater/cnf_pipeline.hpp"
#include "slater/fas_solver.hpp"
#include "slater/gadget.hpp"
#include "slater/io.hpp"
#include "slater/random.hpp"

namespace slater {
namespace {

TEST(Property, DpMatchesBruteForceOnWeightedDigraphs) {
  Rng rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = random_weighted_digraph(rng, 1 + uniform_below(rng, 7), 9);
    const auto bf = min_fas_bruteforce(g);
    const auto dp = min_fas_dp(g);
    ASSERT_EQ(bf.value, dp.value);
    ASSERT_EQ(bf.order, dp.order);
    const auto table = forced_last_table(g);
    for (Vertex v = 0; v < g.size(); ++v) {
      ASSERT_EQ(table.forced_last[v], min_fas_bruteforce(g, v).value);
      ASSERT_EQ(min_fas_dp(g, v).order.back(), v);
    }
  }
}

TEST(Property, FasInvariantUnderRelabelling) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 9);
    const auto t = random_tournament(rng, n);
    const auto order = random_order(rng, n);
    const auto relabel = random_order(rng, n);  // v -> relabel[v]
    auto moved = Tournament::transitive(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v && t.has_arc(u, v)) moved.orient(relabel[u], relabel[v]);
      }
    }
    std::vector<Vertex> seq;
    for (const auto v : order) seq.push_back(relabel[v]);
    ASSERT_EQ(fas_size(t, order), fas_size(moved, LinearOrder(seq)));
  }
}

TEST(Property, ContiguousFasSplitsIntoQuotientAndInternal) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + uniform_below(rng, 7);
    const auto planted = random_planted_modules(rng, n, 2 + uniform_below(rng, 2), false);
    const auto q = quotient(planted.tournament, planted.partition);
    const auto class_order = random_order(rng, planted.partition.class_count());
    std::vector<Vertex> seq;
    Weight internal = 0;
    for (const auto c : class_order) {
      const auto& members = planted.partition.members(c);
      const auto local = min_fas_bruteforce(planted.tournament.induced(members)).order;
      for (const auto i : local) seq.push_back(members[i]);
      internal += q.internal_fas[c];
    }
    ASSERT_EQ(static_cast<Weight>(fas_size(planted.tournament, LinearOrder(seq))),
              weighted_fas(q.graph, class_order) + internal);
  }
}

TEST(Property, ModuleSlaterMatchesPlain) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + uniform_below(rng, 8);
    const auto planted = random_planted_modules(rng, n, 2 + uniform_below(rng, 2), true);
    const auto plain = slater_winners(planted.tournament);
    const auto modular = slater_winners(planted.tournament, planted.partition);
    ASSERT_EQ(plain.min_fas, modular.min_fas);
    ASSERT_EQ(plain.winners, modular.winners);
    for (const auto w : plain.winners) ASSERT_EQ(plain.scores[w], modular.scores[w]);
  }
}

TEST(Property, ContiguizeStepsNeverIncreaseFas) {
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + uniform_below(rng, 7);
    const auto planted = random_planted_modules(rng, n, 2 + uniform_below(rng, 2), false);
    const auto start = random_order(rng, n);
    std::vector<BlockMove> trace;
    const auto out = contiguize(planted.tournament, planted.partition, start, &trace);
    ASSERT_TRUE(is_module_contiguous(planted.partition, out));
    Weight total = 0;
    for (const auto& step : trace) {
      ASSERT_LE(std::min(step.left_delta, step.right_delta), 0);
      total += step.applied_delta();
    }
    ASSERT_EQ(static_cast<Weight>(fas_size(planted.tournament, out)),
              static_cast<Weight>(fas_size(planted.tournament, start)) + total);
  }
}

TEST(Property, MajorityOfSevenHasOddMargins) {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 10);
    Profile p{n, {}};
    for (int v = 0; v < 7; ++v) p.voters.push_back(random_order(rng, n));
    const auto r = aggregate_majority(p);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        const auto m = r.margins.margin(a, b);
        ASSERT_EQ(std::abs(m) % 2, 1);
        ASSERT_EQ(m > 0, r.tournament.has_arc(a, b));
      }
    }
  }
}

TEST(Property, FormatRoundTrips) {
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform_below(rng, 12);
    const auto t = random_tournament(rng, n);
    ASSERT_EQ(parse_tournament(to_text(t)), t);
    const auto g = random_graph(rng, n);
    ASSERT_EQ(parse_graph(to_text(g)), g);
    if (n > 0) {
      Profile p{n, {random_order(rng, n), random_order(rng, n), random_order(rng, n)}};
      ASSERT_EQ(parse_profile(to_text(p)), p);
      const auto planted = random_planted_modules(rng, n, 1 + uniform_below(rng, n), false);
      ASSERT_EQ(parse_modules(to_text(planted.partition)), planted.partition);
    }
    const auto inst = random_maxmodel_instance(rng, 6, 5);
    ASSERT_EQ(to_instance(parse_dimacs(to_text(to_dimacs(inst)))), inst);
    if (!inst.cnf.clauses.empty()) {
      const auto pcnf = maxmodel_to_restricted(inst).pcnf;
      ASSERT_EQ(to_partitioned(parse_dimacs(to_text(to_dimacs(pcnf)))), pcnf);
    }
  }
}

TEST(Property, RandomInstancesStayAllFalseSatisfiable) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_maxmodel_instance(rng, 5, 5);
    ASSERT_NO_THROW(inst.validate());
    const auto r = max_model_decide(inst);
    ASSERT_TRUE(evaluate(inst.cnf, r.witness));
    ASSERT_EQ(r.witness.weight(), r.max_weight);
  }
}

TEST(Property, IndependentSetMatchesBranching) {
  // Independent recursive branch-and-bound: include or exclude vertex 0.
  const std::function<std::size_t(const Graph&, std::vector<bool>&, Vertex)> branch =
      [&](const Graph& g, std::vector<bool>& removed, Vertex v) -> std::size_t {
    if (v == g.n) return 0;
    if (removed[v]) return branch(g, removed, v + 1);
    std::size_t best = branch(g, removed, v + 1);
    std::vector<Vertex> newly;
    for (Vertex u = v + 1; u < g.n; ++u) {
      if (!removed[u] && g.adjacent(u, v)) {
        removed[u] = true;
        newly.push_back(u);
      }
    }
    best = std::max(best, 1 + branch(g, removed, v + 1));
    for (const auto u : newly) removed[u] = false;
    return best;
  };
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph(rng, 1 + uniform_below(rng, 14));
    std::vector<bool> removed(g.n, false);
    ASSERT_EQ(max_independent_set_parity(g).max_size, branch(g, removed, 0));
  }
}

}  // namespace
}  // namespace slater
