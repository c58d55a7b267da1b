#include <gtest/gtest.h>

#include "slater/errors.hpp"
#include "slater/gadget.hpp"
#include "slater/io.hpp"

namespace slater {
namespace {

// Line and column of the FormatError raised by parsing `text`.
template <typename Parse>
std::pair<std::size_t, std::size_t> error_position(Parse parse, std::string_view text) {
  try {
    parse(text);
  } catch (const FormatError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no FormatError for:\n" << text;
  return {0, 0};
}

TEST(TournamentFormat, RoundTrip) {
  const std::string text = "tournament 3\n-10\n0-1\n10-\n";
  const auto t = parse_tournament(text);
  EXPECT_TRUE(t.has_arc(0, 1));
  EXPECT_TRUE(t.has_arc(2, 0));
  EXPECT_EQ(to_text(t), text);
}

TEST(TournamentFormat, Diagnostics) {
  const auto p = [](std::string_view s) { return parse_tournament(s); };
  EXPECT_EQ(error_position(p, "tournament 3\n-10\n0-1\n1x-\n"), std::make_pair(4UL, 2UL));
  EXPECT_EQ(error_position(p, "tournament 3\n-10\n0-1\n11-\n"), std::make_pair(4UL, 2UL));
  EXPECT_EQ(error_position(p, "tournament  3\n"), std::make_pair(1UL, 12UL));
  EXPECT_EQ(error_position(p, "tournament 2\n-1\n0-\n\n"), std::make_pair(4UL, 1UL));
  EXPECT_EQ(error_position(p, "tournament 2\n-1\n"), std::make_pair(3UL, 1UL));
  EXPECT_EQ(error_position(p, "tournament 2\n-10\n0-\n"), std::make_pair(2UL, 3UL));
  EXPECT_EQ(error_position(p, "tournament 02\n"), std::make_pair(1UL, 12UL));
}

TEST(ProfileFormat, RoundTripAndErrors) {
  const std::string text = "profile 3 2\n2 1 0\n0 1 2\n";
  EXPECT_EQ(to_text(parse_profile(text)), text);
  const auto p = [](std::string_view s) { return parse_profile(s); };
  EXPECT_EQ(error_position(p, "profile 3 1\n2 2 0\n"), std::make_pair(2UL, 3UL));
  EXPECT_EQ(error_position(p, "profile 3 1\n2 1\n"), std::make_pair(2UL, 4UL));
  EXPECT_EQ(error_position(p, "profile 3 1\n2 1 3\n"), std::make_pair(2UL, 5UL));
  EXPECT_EQ(error_position(p, "profile 3 0\n"), std::make_pair(1UL, 1UL));
}

TEST(ModulesFormat, RoundTripAndErrors) {
  const std::string text = "modules 2\n0 2\n1\n";
  const auto mp = parse_modules(text);
  EXPECT_EQ(mp.class_of(2), 0U);
  EXPECT_EQ(to_text(mp), text);
  const auto p = [](std::string_view s) { return parse_modules(s); };
  EXPECT_EQ(error_position(p, "modules 2\n0 1\n1\n"), std::make_pair(3UL, 1UL));
  EXPECT_EQ(error_position(p, "modules 2\n0 3\n1\n"), std::make_pair(2UL, 3UL));
}

TEST(GraphFormat, RoundTripAndErrors) {
  const std::string text = "graph 3 2\n0 1\n1 2\n";
  EXPECT_EQ(to_text(parse_graph(text)), text);
  const auto p = [](std::string_view s) { return parse_graph(s); };
  EXPECT_EQ(error_position(p, "graph 2 1\n1 1\n"), std::make_pair(2UL, 1UL));
  EXPECT_EQ(error_position(p, "graph 2 1\n0 1 \n"), std::make_pair(2UL, 4UL));
}

TEST(DimacsFormat, RoundTrip) {
  const std::string text = "c dvar 2\nc lr RL\np cnf 2 2\n-1 2 0\n-2 0\n";
  const auto f = parse_dimacs(text);
  EXPECT_EQ(f.dvar, 2U);
  ASSERT_TRUE(f.sides.has_value());
  EXPECT_EQ(*f.sides, (std::vector<Side>{Side::R, Side::L}));
  EXPECT_EQ(f.cnf.clauses, (std::vector<Clause>{{-1, 2}, {-2}}));
  EXPECT_EQ(to_text(f), text);
  const auto pcnf = to_partitioned(f);
  EXPECT_EQ(pcnf.instance.dvar, 2U);
}

TEST(DimacsFormat, OtherCommentsAreIgnored) {
  const auto f = parse_dimacs("c generated\nc\nc dvar 1\np cnf 1 1\n-1 0\n");
  EXPECT_EQ(f.dvar, 1U);
  EXPECT_FALSE(f.sides.has_value());
  EXPECT_THROW(to_partitioned(f), FormatError);
  EXPECT_THROW(to_instance(parse_dimacs("p cnf 1 0\n")), FormatError);
}

TEST(DimacsFormat, Diagnostics) {
  const auto p = [](std::string_view s) { return parse_dimacs(s); };
  EXPECT_EQ(error_position(p, "p cnf 2 1\n-1 3 0\n"), std::make_pair(2UL, 4UL));
  EXPECT_EQ(error_position(p, "c dvar 3\np cnf 2 0\n"), std::make_pair(1UL, 8UL));
  EXPECT_EQ(error_position(p, "c lr LX\np cnf 1 2\n-1 0\n1 0\n"), std::make_pair(1UL, 7UL));
  EXPECT_EQ(error_position(p, "c lr L\np cnf 1 2\n-1 0\n1 0\n"), std::make_pair(1UL, 6UL));
  EXPECT_EQ(error_position(p, "p cnf 1 1\n-1\n"), std::make_pair(2UL, 3UL));
  EXPECT_EQ(error_position(p, "p cnf 1 1\n0\n"), std::make_pair(2UL, 1UL));
  EXPECT_EQ(error_position(p, "p cnf 1 1\n"), std::make_pair(2UL, 1UL));
}

TEST(LayoutFormat, RoundTripFromGadget) {
  const MaxModelInstance inst{Cnf{1, {{-1}}}, 1};
  const auto layout = cnf_to_tournament(inst, find_min_params(1, 1));
  const auto meta = layout_metadata(layout);
  const auto text = to_text(meta);
  EXPECT_EQ(text,
            "params 1 1 17 4\n"
            "module A_1 0 17\nmodule B_1 17 34\nmodule C_1 34 51\nmodule D_1 51 68\n"
            "module E_1 68 88\nmodule F_1 88 105\nmodule T_1 105 109\n"
            "designated 104\n");
  EXPECT_EQ(parse_layout(text), meta);
  const auto p = [](std::string_view s) { return parse_layout(s); };
  EXPECT_EQ(error_position(p, "params 1 1 17 4\nmodule A_1 1 17\ndesignated 0\n"),
            std::make_pair(2UL, 12UL));
  EXPECT_EQ(error_position(p, "params 1 1 17 4\nmodule Q_1 0 17\ndesignated 0\n"),
            std::make_pair(2UL, 8UL));
  EXPECT_EQ(error_position(p, "params 1 1 0 4\n"), std::make_pair(1UL, 12UL));
}

}  // namespace
}  // namespace slater
