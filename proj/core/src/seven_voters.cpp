#include "slater/seven_voters.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "slater/errors.hpp"

namespace slater {

namespace {

// Which sides' clauses attach D/F modules after T_j; the other side attaches
// B/C modules before T_j.
ModulePairSet target_x(const GadgetLayout& layout, const PartitionedCnf& pcnf, Side star_side) {
  ModulePairSet x;
  const auto& clauses = pcnf.instance.cnf.clauses;
  for (std::size_t j = 1; j <= clauses.size(); ++j) {
    const auto t = layout.clause_module(j);
    for (const auto lit : clauses[j - 1]) {
      const auto i = static_cast<std::size_t>(std::abs(lit));
      if (pcnf.sides[j - 1] == star_side) {
        x.emplace(t, layout.section_module(i, lit > 0 ? ModuleKind::F : ModuleKind::D));
      } else {
        x.emplace(layout.section_module(i, lit > 0 ? ModuleKind::C : ModuleKind::B), t);
      }
    }
  }
  return x;
}

void require_source(const GadgetLayout& layout, const PartitionedCnf& pcnf) {
  pcnf.validate();
  if (!(layout.source() == pcnf.instance)) {
    throw InvalidInput("layout was not built from this partitioned formula");
  }
}

// Attachments of the active modules of one target set; asserts each module
// has exactly one clause module and no T_j has both slots in use.
std::map<std::size_t, Attachment> attachments(const GadgetLayout& layout, const ModulePairSet& x) {
  std::map<std::size_t, Attachment> out;
  std::map<std::size_t, Slot> slot_of_clause;
  const std::size_t first_t = 6 * layout.variable_count();
  for (const auto& [a, b] : x) {
    const bool t_first = a >= first_t;
    const auto module = t_first ? b : a;
    const Attachment att{t_first ? a : b, t_first ? Slot::after : Slot::before};
    if (!out.emplace(module, att).second) {
      throw InvalidInput("module " + layout.modules()[module].name() +
                         " is attached to two clause modules");
    }
    const auto [it, fresh] = slot_of_clause.emplace(att.clause_module, att.slot);
    if (!fresh && it->second != att.slot) {
      throw InvalidInput("clause module " + layout.modules()[att.clause_module].name() +
                         " has modules attached on both sides");
    }
  }
  return out;
}

// The two star voters for one target set, as module orders.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> star_pair(
    const GadgetLayout& layout, const std::map<std::size_t, Attachment>& active) {
  const std::size_t n = layout.variable_count();
  const std::size_t m = layout.clause_count();
  std::vector<std::size_t> inactive;
  for (std::size_t mod = 0; mod < 6 * n; ++mod) {
    if (!active.contains(mod)) inactive.push_back(mod);
  }
  std::vector<std::vector<std::size_t>> before(m), after(m);
  for (const auto& [mod, att] : active) {  // ascending module index
    const auto j = att.clause_module - 6 * n;
    (att.slot == Slot::before ? before : after)[j].push_back(mod);
  }
  std::vector<std::size_t> first(inactive);
  for (std::size_t j = 0; j < m; ++j) {
    first.insert(first.end(), before[j].begin(), before[j].end());
    first.push_back(6 * n + j);
    first.insert(first.end(), after[j].begin(), after[j].end());
  }
  std::vector<std::size_t> second;
  for (std::size_t j = m; j-- > 0;) {
    second.insert(second.end(), before[j].rbegin(), before[j].rend());
    second.push_back(6 * n + j);
    second.insert(second.end(), after[j].rbegin(), after[j].rend());
  }
  second.insert(second.end(), inactive.rbegin(), inactive.rend());
  return {std::move(first), std::move(second)};
}

LinearOrder expand(const GadgetLayout& layout, const std::vector<std::size_t>& module_order) {
  std::vector<Vertex> seq;
  seq.reserve(layout.vertex_count());
  for (const auto mod : module_order) {
    const auto r = layout.modules()[mod].range;
    for (Vertex v = r.begin; v < r.end; ++v) seq.push_back(v);
  }
  return LinearOrder(std::move(seq));
}

}  // namespace

ModulePairSet target_x0(const GadgetLayout& layout) {
  ModulePairSet x;
  for (std::size_t j = 1; j <= layout.clause_count(); ++j) {
    for (std::size_t i = 1; i <= layout.variable_count(); ++i) {
      for (const auto kind : {ModuleKind::A, ModuleKind::B, ModuleKind::C}) {
        x.emplace(layout.clause_module(j), layout.section_module(i, kind));
      }
    }
  }
  for (std::size_t i = 1; i <= layout.variable_count(); ++i) {
    x.emplace(layout.section_module(i, ModuleKind::F), layout.section_module(i, ModuleKind::D));
  }
  return x;
}

ModulePairSet target_x1(const GadgetLayout& layout, const PartitionedCnf& pcnf) {
  require_source(layout, pcnf);
  return target_x(layout, pcnf, Side::R);
}

ModulePairSet target_x2(const GadgetLayout& layout, const PartitionedCnf& pcnf) {
  require_source(layout, pcnf);
  return target_x(layout, pcnf, Side::L);
}

SevenVoters build_seven_voters(const GadgetLayout& layout, const PartitionedCnf& pcnf) {
  require_source(layout, pcnf);
  const std::size_t n = layout.variable_count();
  const std::size_t m = layout.clause_count();
  const auto at = [&](std::size_t i, ModuleKind kind) { return layout.section_module(i, kind); };
  const auto t = [&](std::size_t j) { return layout.clause_module(j); };

  SevenVoterPlan plan;
  plan.x0 = target_x0(layout);
  plan.x1 = target_x(layout, pcnf, Side::R);
  plan.x2 = target_x(layout, pcnf, Side::L);
  plan.active1 = attachments(layout, plan.x1);
  plan.active2 = attachments(layout, plan.x2);

  auto& v1 = plan.module_orders[0];
  for (std::size_t mod = 0; mod < 6 * n + m; ++mod) v1.push_back(mod);

  auto& v2 = plan.module_orders[1];
  for (std::size_t i = 1; i <= n; ++i) v2.push_back(at(i, ModuleKind::E));
  for (std::size_t i = 1; i <= n; ++i) {
    v2.push_back(at(i, ModuleKind::F));
    v2.push_back(at(i, ModuleKind::D));
  }
  for (std::size_t j = 1; j <= m; ++j) v2.push_back(t(j));
  for (std::size_t i = 1; i <= n; ++i) {
    for (const auto kind : {ModuleKind::A, ModuleKind::B, ModuleKind::C}) v2.push_back(at(i, kind));
  }

  auto& v3 = plan.module_orders[2];
  for (std::size_t j = m; j >= 1; --j) v3.push_back(t(j));
  for (std::size_t i = n; i >= 1; --i) {
    for (const auto kind : {ModuleKind::C, ModuleKind::B, ModuleKind::A}) v3.push_back(at(i, kind));
  }
  for (std::size_t i = n; i >= 1; --i) {
    v3.push_back(at(i, ModuleKind::F));
    v3.push_back(at(i, ModuleKind::D));
  }
  for (std::size_t i = n; i >= 1; --i) v3.push_back(at(i, ModuleKind::E));

  std::tie(plan.module_orders[3], plan.module_orders[4]) = star_pair(layout, plan.active1);
  std::tie(plan.module_orders[5], plan.module_orders[6]) = star_pair(layout, plan.active2);

  SevenVoters out;
  out.profile.candidates = layout.vertex_count();
  for (const auto& order : plan.module_orders) out.profile.voters.push_back(expand(layout, order));
  out.plan = std::move(plan);
  return out;
}

std::vector<Arc> induced_pairs(const LinearOrder& a, const LinearOrder& b) {
  if (a.size() != b.size()) {
    throw InvalidInput("orders have " + std::to_string(a.size()) + " and " +
                       std::to_string(b.size()) + " candidates");
  }
  const auto pa = a.positions();
  const auto pb = b.positions();
  std::vector<Arc> out;
  for (Vertex u = 0; u < a.size(); ++u) {
    for (Vertex v = 0; v < a.size(); ++v) {
      if (u != v && pa[u] < pa[v] && pb[u] < pb[v]) out.emplace_back(u, v);
    }
  }
  return out;
}

ModulePairSet induced_module_pairs(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
  const auto pairs = induced_pairs(LinearOrder({a.begin(), a.end()}), LinearOrder({b.begin(), b.end()}));
  return {pairs.begin(), pairs.end()};
}

bool realizes_at_module_level(const GadgetLayout& layout, const Profile& profile) {
  profile.validate();
  if (profile.candidates != layout.vertex_count()) return false;
  const auto& mods = layout.modules();
  const std::size_t k = mods.size();
  std::vector<std::size_t> module_of(layout.vertex_count());
  for (std::size_t mod = 0; mod < k; ++mod) {
    for (Vertex v = mods[mod].range.begin; v < mods[mod].range.end; ++v) module_of[v] = mod;
  }
  // wins[a * k + b] = voters placing a before b
  std::vector<int> wins(k * k, 0);
  for (const auto& voter : profile.voters) {
    std::vector<std::size_t> order;
    std::size_t i = 0;
    while (i < voter.size()) {
      const auto mod = module_of[voter[i]];
      const auto r = mods[mod].range;
      for (Vertex v = r.begin; v < r.end; ++v, ++i) {
        if (i >= voter.size() || voter[i] != v) return false;
      }
      order.push_back(mod);
    }
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = x + 1; y < k; ++y) ++wins[order[x] * k + order[y]];
    }
  }
  const auto& mt = layout.module_tournament();
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = 0; b < k; ++b) {
      if (a == b) continue;
      if ((wins[a * k + b] > wins[b * k + a]) != mt.has_arc(a, b)) return false;
    }
  }
  return true;
}

}  // namespace slater
