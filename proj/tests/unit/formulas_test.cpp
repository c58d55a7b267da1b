#include <gtest/gtest.h>

#include "slater/errors.hpp"
#include "slater/formulas.hpp"

namespace slater {
namespace {

MaxModelInstance implication() { return {Cnf{2, {{-1, 2}}}, 2}; }
MaxModelInstance implication_blocked() { return {Cnf{2, {{-1, 2}, {-2}}}, 2}; }

TEST(Evaluate, Examples) {
  EXPECT_TRUE(evaluate(Cnf{2, {{-1, 2}}}, Assignment(2)));
  const Cnf contradiction{1, {{1}, {-1}}};
  EXPECT_FALSE(evaluate(contradiction, Assignment(1, false)));
  EXPECT_FALSE(evaluate(contradiction, Assignment(1, true)));
}

TEST(Cnf, ValidateRejectsBadClauses) {
  EXPECT_THROW((Cnf{2, {{}}}.validate()), InvalidInput);
  EXPECT_THROW((Cnf{2, {{1, 2, -1, -2}}}.validate()), InvalidInput);
  EXPECT_THROW((Cnf{2, {{3}}}.validate()), InvalidInput);
}

TEST(MaxModelInstance, RequiresNegativeLiteralPerClause) {
  EXPECT_THROW((MaxModelInstance{Cnf{2, {{1, 2}}}, 1}.validate()), InvalidInput);
  EXPECT_THROW((MaxModelInstance{Cnf{2, {{-1}}}, 3}.validate()), InvalidInput);
}

TEST(MaxModel, Implication) {
  const auto r = max_model_decide(implication());
  EXPECT_TRUE(r.decision);
  EXPECT_EQ(r.max_weight, 2U);
  EXPECT_EQ(r.witness, Assignment(2, true));
}

TEST(MaxModel, ImplicationBlocked) {
  // The only model is all-False (x1 True would force x2 True).
  const auto r = max_model_decide(implication_blocked());
  EXPECT_FALSE(r.decision);
  EXPECT_EQ(r.max_weight, 0U);
  EXPECT_EQ(r.witness, Assignment(2, false));
}

TEST(MaxModel, NoClauses) {
  const auto r = max_model_decide({Cnf{1, {}}, 1});
  EXPECT_TRUE(r.decision);
  EXPECT_EQ(r.max_weight, 1U);
}

TEST(MaxModel, WitnessPrefersDvarTrue) {
  // Max weight 1 by x1 or x2 alone; x2 is distinguished.
  const auto r = max_model_decide({Cnf{2, {{-1, -2}}}, 2});
  EXPECT_TRUE(r.decision);
  EXPECT_EQ(r.witness, Assignment::from_mask(2, 0b10));
}

TEST(MaxModel, CapIsEnforced) {
  EXPECT_THROW(max_model_decide({Cnf{27, {}}, 1}), CapExceeded);
}

TEST(PartitionedCnf, LiteralOncePerSide) {
  PartitionedCnf ok{{Cnf{2, {{-1, 2}, {-1, -2}}}, 2}, {Side::L, Side::R}};
  EXPECT_NO_THROW(ok.validate());
  EXPECT_TRUE(ok.variable_once_in_left());
  PartitionedCnf bad{{Cnf{2, {{-1, 2}, {-1, -2}}}, 2}, {Side::R, Side::R}};
  EXPECT_THROW(bad.validate(), InvalidInput);
  PartitionedCnf shared_var{{Cnf{2, {{-1, 2}, {1, -2}}}, 2}, {Side::L, Side::L}};
  EXPECT_NO_THROW(shared_var.validate());
  EXPECT_FALSE(shared_var.variable_once_in_left());
}

TEST(IndependentSetParity, Examples) {
  Graph single(1);
  EXPECT_EQ(max_independent_set_parity(single).max_size, 1U);
  EXPECT_TRUE(max_independent_set_parity(single).odd);
  Graph k2(2);
  k2.add_edge(0, 1);
  EXPECT_EQ(max_independent_set_parity(k2).max_size, 1U);
  EXPECT_TRUE(max_independent_set_parity(k2).odd);
  Graph empty(2);
  EXPECT_EQ(max_independent_set_parity(empty).max_size, 2U);
  EXPECT_FALSE(max_independent_set_parity(empty).odd);
}

TEST(Graph, RejectsLoopsAndDuplicates) {
  Graph g(3);
  g.add_edge(2, 0);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_THROW(g.add_edge(0, 2), InvalidInput);
  EXPECT_THROW(g.add_edge(1, 1), InvalidInput);
  EXPECT_THROW(g.add_edge(1, 3), InvalidInput);
}

}  // namespace
}  // namespace slater
