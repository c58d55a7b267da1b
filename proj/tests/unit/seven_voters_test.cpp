#include <gtest/gtest.h>

#include "slater/cnf_pipeline.hpp"
#include "slater/errors.hpp"
#include "slater/seven_voters.hpp"

namespace slater {
namespace {

PartitionedCnf restricted(const MaxModelInstance& in) {
  return reindex_dvar_last(maxmodel_to_restricted(in).pcnf);
}

GadgetLayout small_layout(const PartitionedCnf& pcnf, int s1 = 1, int s2 = 1) {
  const auto& cnf = pcnf.instance.cnf;
  return build_gadget(pcnf.instance, {cnf.num_vars, cnf.clauses.size(), BigInt(s1), BigInt(s2)});
}

TEST(InducedPairs, IdenticalAndReversed) {
  const auto a = LinearOrder({2, 0, 3, 1});
  EXPECT_EQ(induced_pairs(a, a).size(), 6U);
  EXPECT_TRUE(induced_pairs(a, a.reversed()).empty());
  EXPECT_THROW(induced_pairs(a, LinearOrder::identity(3)), InvalidInput);
}

TEST(SevenVoters, RealizesBlockedExample) {
  const auto pcnf = restricted({Cnf{2, {{-1, 2}, {-2}}}, 2});
  const auto layout = small_layout(pcnf, 2, 3);
  const auto voters = build_seven_voters(layout, pcnf);
  ASSERT_EQ(voters.profile.voters.size(), 7U);
  const auto majority = aggregate_majority(voters.profile);
  EXPECT_EQ(majority.tournament, layout.materialize());
  for (Vertex u = 0; u < layout.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < layout.vertex_count(); ++v) {
      const auto m = std::abs(majority.margins.margin(u, v));
      EXPECT_TRUE(m == 1 || m == 3 || m == 5 || m == 7);
    }
  }
  // Inside a module every voter agrees.
  const auto r = layout.modules()[0].range;
  EXPECT_EQ(majority.margins.margin(r.begin, r.begin + 1), 7);
}

TEST(SevenVoters, PairsInduceTargetSets) {
  const auto pcnf = restricted({Cnf{3, {{-1, 2, -3}, {-2, -3}, {-1, 3}}}, 3});
  const auto layout = small_layout(pcnf);
  const auto voters = build_seven_voters(layout, pcnf);
  const auto& o = voters.plan.module_orders;
  EXPECT_EQ(induced_module_pairs(o[1], o[2]), target_x0(layout));
  EXPECT_EQ(induced_module_pairs(o[3], o[4]), target_x1(layout, pcnf));
  EXPECT_EQ(induced_module_pairs(o[5], o[6]), target_x2(layout, pcnf));
  EXPECT_EQ(voters.plan.x1, target_x1(layout, pcnf));
  EXPECT_TRUE(realizes_at_module_level(layout, voters.profile));
  EXPECT_EQ(aggregate_majority(voters.profile).tournament, layout.materialize());
}

TEST(SevenVoters, VertexPairsOfStarVoters) {
  const auto pcnf = restricted({Cnf{2, {{-1, 2}}}, 2});
  const auto layout = small_layout(pcnf);
  const auto voters = build_seven_voters(layout, pcnf);
  const auto pairs = induced_pairs(voters.profile.voters[3], voters.profile.voters[4]);
  std::set<Arc> expected;
  for (const auto& [a, b] : voters.plan.x1) {
    const auto ra = layout.modules()[a].range;
    const auto rb = layout.modules()[b].range;
    for (Vertex u = ra.begin; u < ra.end; ++u) {
      for (Vertex v = rb.begin; v < rb.end; ++v) expected.emplace(u, v);
    }
  }
  for (const auto& mod : layout.modules()) {
    for (Vertex u = mod.range.begin; u < mod.range.end; ++u) {
      for (Vertex v = u + 1; v < mod.range.end; ++v) expected.emplace(u, v);
    }
  }
  EXPECT_EQ(std::set<Arc>(pairs.begin(), pairs.end()), expected);
}

TEST(SevenVoters, NoClausesGivesBaseTournament) {
  const PartitionedCnf empty{{Cnf{2, {}}, 2}, {}};
  const auto layout = small_layout(empty);
  const auto voters = build_seven_voters(layout, empty);
  const auto& o = voters.plan.module_orders;
  EXPECT_TRUE(induced_module_pairs(o[3], o[4]).empty());
  EXPECT_TRUE(induced_module_pairs(o[5], o[6]).empty());
  const Profile base{layout.vertex_count(),
                     {voters.profile.voters[0], voters.profile.voters[1], voters.profile.voters[2]}};
  EXPECT_EQ(aggregate_majority(base).tournament, aggregate_majority(voters.profile).tournament);
  EXPECT_EQ(aggregate_majority(voters.profile).tournament, layout.materialize());
}

TEST(SevenVoters, AttachmentsAreUnique) {
  const auto pcnf = restricted({Cnf{2, {{-1, -2}, {-2, 1}}}, 2});
  const auto layout = small_layout(pcnf);
  const auto voters = build_seven_voters(layout, pcnf);
  for (const auto& [mod, att] : voters.plan.active1) {
    const auto kind = layout.modules()[mod].kind;
    if (kind == ModuleKind::D || kind == ModuleKind::F) {
      EXPECT_EQ(att.slot, Slot::after);
    } else {
      EXPECT_EQ(att.slot, Slot::before);
    }
  }
}

TEST(SevenVoters, RejectsBrokenPartition) {
  const PartitionedCnf bad{{Cnf{2, {{-1, 2}, {-1, -2}}}, 2}, {Side::R, Side::R}};
  const auto layout = build_gadget(bad.instance, {2, 2, BigInt(1), BigInt(1)});
  EXPECT_THROW(build_seven_voters(layout, bad), InvalidInput);
}

}  // namespace
}  // namespace slater
