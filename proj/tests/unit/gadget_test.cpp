#include <gtest/gtest.h>

#include "slater/errors.hpp"
#include "slater/gadget.hpp"

namespace slater {
namespace {

MaxModelInstance implication() { return {Cnf{2, {{-1, 2}}}, 2}; }
MaxModelInstance implication_blocked() { return {Cnf{2, {{-1, 2}, {-2}}}, 2}; }

ReductionParams params(std::size_t n, std::size_t m, int s1, int s2) {
  return {n, m, BigInt(s1), BigInt(s2)};
}

TEST(CheckParams, Examples) {
  EXPECT_TRUE(check_params(params(2, 1, 113, 7)).ok);
  const auto bad = check_params(params(1, 1, 6, 1));
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.first_failure(), 2);
  EXPECT_EQ(bad.slack[1], BigInt(6 - 19));
}

TEST(CheckParams, PolynomialDefaultsHold) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      EXPECT_TRUE(check_params(polynomial_params(n, m)).ok) << n << "," << m;
    }
  }
  EXPECT_EQ(polynomial_params(1, 1).s2, BigInt(32));
  EXPECT_EQ(polynomial_params(1, 1).s1, BigInt(33554432));
}

// Reference values from tests/oracles/oracles.py.
TEST(FindMinParams, FrozenTable) {
  struct Row {
    std::size_t n, m;
    int s1, s2, total;
  };
  const Row rows[] = {{1, 1, 17, 4, 109},    {2, 1, 113, 7, 1368},  {1, 2, 65, 4, 401},
                      {2, 2, 323, 7, 3895},  {3, 1, 281, 10, 5075}, {3, 2, 761, 10, 13725},
                      {2, 3, 631, 7, 7598},  {3, 3, 1441, 10, 25975}};
  for (const auto& r : rows) {
    const auto p = find_min_params(r.n, r.m);
    EXPECT_EQ(p.s1, BigInt(r.s1)) << r.n << "," << r.m;
    EXPECT_EQ(p.s2, BigInt(r.s2)) << r.n << "," << r.m;
    EXPECT_EQ(gadget_vertex_count(p), BigInt(r.total));
    EXPECT_TRUE(check_params(p).ok);
    auto smaller = p;
    smaller.s1 -= 1;
    EXPECT_FALSE(check_params(smaller).ok);
  }
}

TEST(Gadget, ImplicationLayout) {
  const auto layout = cnf_to_tournament(implication(), params(2, 1, 113, 7));
  EXPECT_EQ(layout.vertex_count(), 1368U);
  ASSERT_EQ(layout.modules().size(), 13U);
  EXPECT_EQ(layout.modules()[4].name(), "E_1");
  EXPECT_EQ(layout.modules()[4].range.size(), 115U);
  EXPECT_EQ(layout.modules()[10].range.size(), 116U);
  EXPECT_EQ(layout.modules()[12].name(), "T_1");
  const auto f2 = layout.modules()[layout.section_module(2, ModuleKind::F)].range;
  EXPECT_EQ(layout.designated(), f2.end - 1);
  EXPECT_EQ(layout.designated(), 1360U);

  const auto& mt = layout.module_tournament();
  const auto at = [&](std::size_t i, ModuleKind k) {
    return static_cast<Vertex>(layout.section_module(i, k));
  };
  const auto t1 = static_cast<Vertex>(layout.clause_module(1));
  // x_1 occurs negatively in clause 1.
  EXPECT_TRUE(mt.has_arc(t1, at(1, ModuleKind::A)));
  EXPECT_TRUE(mt.has_arc(t1, at(1, ModuleKind::C)));
  EXPECT_TRUE(mt.has_arc(t1, at(1, ModuleKind::D)));
  EXPECT_TRUE(mt.has_arc(at(1, ModuleKind::B), t1));
  EXPECT_TRUE(mt.has_arc(at(1, ModuleKind::E), t1));
  EXPECT_TRUE(mt.has_arc(at(1, ModuleKind::F), t1));
  // x_2 occurs positively.
  EXPECT_TRUE(mt.has_arc(t1, at(2, ModuleKind::A)));
  EXPECT_TRUE(mt.has_arc(t1, at(2, ModuleKind::B)));
  EXPECT_TRUE(mt.has_arc(t1, at(2, ModuleKind::F)));
  EXPECT_TRUE(mt.has_arc(at(2, ModuleKind::C), t1));
  EXPECT_TRUE(mt.has_arc(at(2, ModuleKind::D), t1));
  EXPECT_TRUE(mt.has_arc(at(2, ModuleKind::E), t1));
  // Section structure.
  EXPECT_TRUE(mt.has_arc(at(1, ModuleKind::F), at(1, ModuleKind::D)));
  EXPECT_TRUE(mt.has_arc(at(1, ModuleKind::D), at(1, ModuleKind::E)));
  EXPECT_TRUE(mt.has_arc(at(1, ModuleKind::E), at(1, ModuleKind::F)));
  EXPECT_TRUE(mt.has_arc(at(1, ModuleKind::F), at(2, ModuleKind::A)));

  const auto q = layout.quotient();
  EXPECT_EQ(q.weight(at(2, ModuleKind::F), at(2, ModuleKind::D)), 113 * 113);
  EXPECT_EQ(q.weight(at(2, ModuleKind::E), at(2, ModuleKind::F)), 116 * 113);
  EXPECT_EQ(q.weight(at(1, ModuleKind::F), at(1, ModuleKind::D)), 113 * 113);
}

TEST(Gadget, MaterializedModulesAreModules) {
  const auto layout = cnf_to_tournament(implication(), params(2, 1, 113, 7));
  const auto t = layout.materialize();
  const auto mp = layout.partition();
  EXPECT_TRUE(verify_modules(t, mp));
  const auto q = quotient(t, mp);
  EXPECT_EQ(q.graph, layout.quotient());
  for (const auto w : q.internal_fas) EXPECT_EQ(w, 0);
}

TEST(Gadget, Preconditions) {
  EXPECT_THROW(cnf_to_tournament(implication(), params(2, 1, 6, 1)), InvalidInput);
  EXPECT_THROW(cnf_to_tournament({Cnf{2, {{-2, 1}}}, 1}, params(2, 1, 113, 7)), InvalidInput);
  EXPECT_THROW(cnf_to_tournament(implication(), params(2, 2, 113, 7)), InvalidInput);
  EXPECT_THROW(build_gadget({Cnf{2, {{-2, -2}}}, 2}, params(2, 1, 1, 1)), InvalidInput);
  EXPECT_THROW(cnf_to_tournament(implication(), params(2, 1, 113, 7)).materialize(1000),
               CapExceeded);
}

TEST(Gadget, ReindexMovesDvarLast) {
  const MaxModelInstance in{Cnf{3, {{-1, 2}, {-3}}}, 1};
  const auto r = reindex_dvar_last(in);
  EXPECT_EQ(r.instance.dvar, 3U);
  EXPECT_EQ(r.instance.cnf.clauses, (std::vector<Clause>{{-3, 2}, {-1}}));
  EXPECT_EQ(r.var_map, (std::vector<std::size_t>{3, 2, 1}));
  EXPECT_EQ(max_model_decide(r.instance).decision, max_model_decide(in).decision);
}

TEST(Gadget, OrderingAssignmentCorrespondence) {
  const auto layout = cnf_to_tournament(implication(), params(2, 1, 113, 7));
  for (const std::uint64_t mask : {0b00U, 0b10U, 0b11U}) {
    const auto a = Assignment::from_mask(2, mask);
    const auto g = assignment_to_ordering(layout, a);
    EXPECT_EQ(ordering_to_assignment(layout, g.order), a);
    EXPECT_LE(BigInt(g.fas), g.bound);
    EXPECT_FALSE(structure_violation(layout, g.order).has_value());
  }
  EXPECT_THROW(assignment_to_ordering(layout, Assignment::from_mask(2, 0b01)), InvalidInput);
}

TEST(Gadget, AllFalseOrderingIsBaseline) {
  const auto layout = cnf_to_tournament(implication(), params(2, 1, 113, 7));
  const auto g = assignment_to_ordering(layout, Assignment(2));
  const auto at = [&](std::size_t i, ModuleKind k) {
    return static_cast<Vertex>(layout.section_module(i, k));
  };
  // T_1 sits before D_1, the last module of section 1 (x_1 False satisfies it).
  const std::vector<Vertex> expected{at(1, ModuleKind::A), at(1, ModuleKind::B),
                                     at(1, ModuleKind::C), at(1, ModuleKind::E),
                                     at(1, ModuleKind::F), 12,
                                     at(1, ModuleKind::D), at(2, ModuleKind::A),
                                     at(2, ModuleKind::B), at(2, ModuleKind::C),
                                     at(2, ModuleKind::E), at(2, ModuleKind::F),
                                     at(2, ModuleKind::D)};
  EXPECT_EQ(g.order.sequence(), expected);
  const auto p = layout.params();
  EXPECT_LE(BigInt(g.fas), assignment_bound(p, Assignment(2)));
  // Bound(all-False) falls short of the baseline expression by (n-1) s1.
  EXPECT_EQ(baseline_bound(p) - assignment_bound(p, Assignment(2)), BigInt(113));
}

TEST(Gadget, OptimalQuotientOrdering) {
  const auto layout = cnf_to_tournament(implication(), params(2, 1, 113, 7));
  const auto best = min_fas_dp(layout.quotient());
  EXPECT_EQ(best.value, 29493);  // tests/oracles/oracles.py
  const auto a = ordering_to_assignment(layout, best.order);
  EXPECT_EQ(a, Assignment(2, true));
  EXPECT_FALSE(structure_violation(layout, best.order).has_value());
  EXPECT_GE(BigInt(best.value), quotient_lower_bound(layout.params()));
  EXPECT_LE(BigInt(best.value), assignment_bound(layout.params(), a));
  EXPECT_EQ(assignment_bound(layout.params(), a), BigInt(2 * 113 * 113 + 5 * 113 * 7 + 49 + 63));
}

TEST(Gadget, BlockedOptimum) {
  const auto p = find_min_params(2, 2);
  const auto layout = cnf_to_tournament(implication_blocked(), p);
  EXPECT_EQ(min_fas_dp(layout.quotient()).value, 232904);  // tests/oracles/oracles.py
}

TEST(Gadget, StructureViolationReportsReason) {
  const auto layout = cnf_to_tournament(implication(), params(2, 1, 113, 7));
  EXPECT_TRUE(structure_violation(layout, LinearOrder::identity(13).reversed()).has_value());
  std::vector<Vertex> seq{0, 1, 2, 3, 5, 4, 12, 6, 7, 8, 9, 10, 11};  // D F E: not a rotation
  EXPECT_TRUE(structure_violation(layout, LinearOrder(seq)).has_value());
}

TEST(DecideDesignated, KnownAnswers) {
  EXPECT_TRUE(decide_designated(implication(), find_min_params(2, 1)));
  EXPECT_FALSE(decide_designated(implication_blocked(), find_min_params(2, 2)));
  EXPECT_TRUE(decide_designated({Cnf{1, {}}, 1}, find_min_params(1, 0)));
}

}  // namespace
}  // namespace slater
