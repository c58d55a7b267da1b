#pragma once

// Seven-voter realization of gadget tournaments built from L/R-partitioned
// formulas.
//
// Voter 1 lists the sections in order followed by T_1..T_m. Voters 2 and 3
// agree only on X0 = (T x (A u B u C)) u (F_i x D_i). Voters 4/5 and 6/7 agree
// only on X1 and X2, which flip the clause-incidence arcs that the first three
// voters set to the "variable absent" pattern with margin one.

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "slater/formulas.hpp"
#include "slater/gadget.hpp"
#include "slater/tournament.hpp"

namespace slater {

using ModulePair = std::pair<std::size_t, std::size_t>;
using ModulePairSet = std::set<ModulePair>;

enum class Slot { before, after };

// An active module sits immediately before or after its clause module.
struct Attachment {
  std::size_t clause_module = 0;
  Slot slot = Slot::before;
  friend bool operator==(const Attachment&, const Attachment&) = default;
};

struct SevenVoterPlan {
  std::array<std::vector<std::size_t>, 7> module_orders;
  ModulePairSet x0;
  ModulePairSet x1;
  ModulePairSet x2;
  std::map<std::size_t, Attachment> active1;
  std::map<std::size_t, Attachment> active2;
};

struct SevenVoters {
  Profile profile;
  SevenVoterPlan plan;
};

// The target arc sets, evaluated directly from their set expressions.
ModulePairSet target_x0(const GadgetLayout& layout);
ModulePairSet target_x1(const GadgetLayout& layout, const PartitionedCnf& pcnf);
ModulePairSet target_x2(const GadgetLayout& layout, const PartitionedCnf& pcnf);

// Throws InvalidInput if pcnf violates the literal-once-per-side property or
// does not match the layout's source formula.
SevenVoters build_seven_voters(const GadgetLayout& layout, const PartitionedCnf& pcnf);

// All (u, v) with u before v in both orders, ascending.
std::vector<Arc> induced_pairs(const LinearOrder& a, const LinearOrder& b);
ModulePairSet induced_module_pairs(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b);

// Vertex orders that keep every module contiguous in ascending internal order
// are fully described by their module orders; this checks that and compares
// the module-level majority with the layout's module tournament.
bool realizes_at_module_level(const GadgetLayout& layout, const Profile& profile);

}  // namespace slater
