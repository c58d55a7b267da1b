#include "slater/gadget.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "slater/errors.hpp"

namespace slater {

namespace {

constexpr std::array<ModuleKind, 6> kSectionKinds = {ModuleKind::A, ModuleKind::B, ModuleKind::C,
                                                     ModuleKind::D, ModuleKind::E, ModuleKind::F};

std::size_t kind_offset(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::A: return 0;
    case ModuleKind::B: return 1;
    case ModuleKind::C: return 2;
    case ModuleKind::D: return 3;
    case ModuleKind::E: return 4;
    case ModuleKind::F: return 5;
    case ModuleKind::T: break;
  }
  throw InvalidInput("T is not a section module");
}

// Sum of the terms shared by all three inequalities: m^2 s2^2 + 9m(n-1) s2.
BigInt clause_terms(const ReductionParams& p) {
  const BigInt n = p.n;
  const BigInt m = p.m;
  return m * m * p.s2 * p.s2 + 9 * m * (n - 1) * p.s2;
}

bool feasible(const ReductionParams& p) { return check_params(p).ok; }

std::string big_to_string(const BigInt& v) { return v.str(); }

}  // namespace

int ParamCheck::first_failure() const {
  for (int k = 0; k < 3; ++k) {
    if (slack[static_cast<std::size_t>(k)] <= 0) return k + 1;
  }
  return 0;
}

ParamCheck check_params(const ReductionParams& p) {
  const BigInt n = p.n;
  const BigInt m = p.m;
  const BigInt tail = clause_terms(p);
  ParamCheck c;
  c.slack[0] = p.s1 * p.s1 - ((3 * n - 1) * m * p.s1 * p.s2 + 3 * n * p.s1 + tail);
  c.slack[1] = p.s1 * p.s2 - (3 * n * p.s1 + tail);
  c.slack[2] = p.s1 - tail;
  c.ok = p.s1 > 0 && p.s2 > 0 && c.first_failure() == 0;
  return c;
}

BigInt gadget_vertex_count(const ReductionParams& p) {
  return 6 * BigInt(p.n) * p.s1 + 2 * BigInt(p.n) + 1 + BigInt(p.m) * p.s2;
}

ReductionParams find_min_params(std::size_t n, std::size_t m) {
  if (n == 0) throw InvalidInput("parameter search needs at least one variable");
  if (m == 0) {
    // No clause terms: s1 > 3n and s2 > 3n, and s2 does not affect the count.
    return {n, m, BigInt(3 * n + 1), BigInt(3 * n + 1)};
  }
  std::optional<ReductionParams> best;
  BigInt best_total;
  // Inequality (2) needs s2 > 3n. Inequality (3) forces s1 > m^2 s2^2, so
  // once 6n (m^2 s2^2 + 1) alone reaches the best total no larger s2 can win.
  for (BigInt s2 = 3 * BigInt(n) + 1;; ++s2) {
    const BigInt floor_total = 6 * BigInt(n) * (BigInt(m) * m * s2 * s2 + 1);
    if (best && floor_total > best_total) break;
    ReductionParams p{n, m, BigInt(1), s2};
    BigInt hi = clause_terms(p) + 1;
    p.s1 = hi;
    while (!feasible(p)) {
      hi *= 2;
      p.s1 = hi;
    }
    BigInt lo = 0;  // infeasible
    while (hi - lo > 1) {
      const BigInt mid = (lo + hi) / 2;
      p.s1 = mid;
      if (feasible(p)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    p.s1 = hi;
    const BigInt total = gadget_vertex_count(p);
    if (!best || total < best_total) {
      best = p;
      best_total = total;
    }
  }
  return *best;
}

ReductionParams polynomial_params(std::size_t n, std::size_t m) {
  const BigInt base = BigInt(n + m);
  const BigInt s2 = boost::multiprecision::pow(base, 5);
  return {n, m, boost::multiprecision::pow(s2, 5), s2};
}

std::string GadgetModule::name() const {
  return std::string(1, static_cast<char>(kind)) + "_" + std::to_string(index);
}

std::size_t GadgetLayout::section_module(std::size_t var, ModuleKind kind) const {
  if (var < 1 || var > params_.n) {
    throw InvalidInput("variable " + std::to_string(var) + " outside 1.." +
                       std::to_string(params_.n));
  }
  return 6 * (var - 1) + kind_offset(kind);
}

std::size_t GadgetLayout::clause_module(std::size_t clause) const {
  if (clause < 1 || clause > params_.m) {
    throw InvalidInput("clause " + std::to_string(clause) + " outside 1.." +
                       std::to_string(params_.m));
  }
  return 6 * params_.n + clause - 1;
}

ModulePartition GadgetLayout::partition() const {
  std::vector<std::vector<Vertex>> classes;
  classes.reserve(modules_.size());
  for (const auto& mod : modules_) {
    std::vector<Vertex> members(mod.range.size());
    for (std::size_t k = 0; k < members.size(); ++k) {
      members[k] = mod.range.begin + static_cast<Vertex>(k);
    }
    classes.push_back(std::move(members));
  }
  return ModulePartition(vertex_count_, std::move(classes));
}

WeightedDigraph GadgetLayout::quotient() const {
  const std::size_t k = modules_.size();
  WeightedDigraph g(k);
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = 0; b < k; ++b) {
      if (a != b && module_tournament_.has_arc(a, b)) {
        g.set_weight(a, b,
                     static_cast<Weight>(modules_[a].range.size() * modules_[b].range.size()));
      }
    }
  }
  return g;
}

Tournament GadgetLayout::materialize(std::size_t vertex_cap) const {
  if (vertex_count_ > vertex_cap) {
    throw CapExceeded("gadget has " + std::to_string(vertex_count_) +
                      " vertices; materialization supports at most " +
                      std::to_string(vertex_cap));
  }
  auto t = Tournament::transitive(vertex_count_);
  const std::size_t k = modules_.size();
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = 0; b < a; ++b) {
      if (module_tournament_.has_arc(a, b)) t.orient_all(modules_[a].range, modules_[b].range);
    }
  }
  return t;
}

ReindexedInstance reindex_dvar_last(const MaxModelInstance& inst) {
  inst.validate();
  const std::size_t n = inst.cnf.num_vars;
  const std::size_t d = inst.dvar;
  ReindexedInstance out{inst, std::vector<std::size_t>(n)};
  for (std::size_t v = 1; v <= n; ++v) out.var_map[v - 1] = v;
  out.var_map[d - 1] = n;
  out.var_map[n - 1] = d;
  for (auto& clause : out.instance.cnf.clauses) {
    for (auto& lit : clause) {
      const auto v = static_cast<Literal>(out.var_map[static_cast<std::size_t>(std::abs(lit)) - 1]);
      lit = lit > 0 ? v : -v;
    }
  }
  out.instance.dvar = n;
  return out;
}

PartitionedCnf reindex_dvar_last(const PartitionedCnf& pcnf) {
  return {reindex_dvar_last(pcnf.instance).instance, pcnf.sides};
}

GadgetLayout build_gadget(const MaxModelInstance& inst, const ReductionParams& p) {
  inst.validate();
  const std::size_t n = inst.cnf.num_vars;
  const std::size_t m = inst.cnf.clauses.size();
  if (p.n != n || p.m != m) {
    throw InvalidInput("parameters are for n=" + std::to_string(p.n) + ", m=" +
                       std::to_string(p.m) + " but the formula has n=" + std::to_string(n) +
                       ", m=" + std::to_string(m));
  }
  if (inst.dvar != n) {
    throw InvalidInput("distinguished variable must be the last variable (x_" +
                       std::to_string(n) + "), got x_" + std::to_string(inst.dvar));
  }
  if (p.s1 < 1 || p.s2 < 1) throw InvalidInput("s1 and s2 must be positive");
  // pattern[j][i]: 0 absent, +1 positive, -1 negative occurrence of x_i in clause j.
  std::vector<std::vector<int>> pattern(m, std::vector<int>(n + 1, 0));
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto lit : inst.cnf.clauses[j]) {
      auto& cell = pattern[j][static_cast<std::size_t>(std::abs(lit))];
      if (cell != 0) {
        throw InvalidInput("clause " + std::to_string(j + 1) + " repeats variable " +
                           std::to_string(std::abs(lit)));
      }
      cell = lit > 0 ? 1 : -1;
    }
  }
  const BigInt total = gadget_vertex_count(p);
  if (total > BigInt(std::numeric_limits<Vertex>::max())) {
    throw CapExceeded("gadget would have " + big_to_string(total) +
                      " vertices, beyond 32-bit vertex ids");
  }
  const auto s1 = p.s1.convert_to<std::size_t>();
  const auto s2 = p.s2.convert_to<std::size_t>();

  GadgetLayout layout;
  layout.params_ = p;
  layout.source_ = inst;
  Vertex next = 0;
  const auto add = [&](ModuleKind kind, std::size_t index, std::size_t size) {
    const VertexRange r{next, static_cast<Vertex>(next + size)};
    layout.modules_.push_back({kind, index, r});
    next = r.end;
  };
  for (std::size_t i = 1; i <= n; ++i) {
    for (const auto kind : kSectionKinds) {
      std::size_t size = s1;
      if (kind == ModuleKind::E) size += i < n ? 2 : 3;
      add(kind, i, size);
    }
  }
  for (std::size_t j = 1; j <= m; ++j) add(ModuleKind::T, j, s2);
  layout.vertex_count_ = next;

  // Index order already gives earlier -> later for sections, A -> B -> C ->
  // {D, E, F}, D -> E -> F, sections -> T and T_j -> T_j'.
  auto mt = Tournament::transitive(layout.modules_.size());
  for (std::size_t i = 1; i <= n; ++i) {
    const auto at = [&](ModuleKind kind) {
      return static_cast<Vertex>(layout.section_module(i, kind));
    };
    mt.orient(at(ModuleKind::F), at(ModuleKind::D));
    for (std::size_t j = 1; j <= m; ++j) {
      const auto t = static_cast<Vertex>(layout.clause_module(j));
      std::array<ModuleKind, 3> beaten{};  // modules that T_j points to
      switch (pattern[j - 1][i]) {
        case 0: beaten = {ModuleKind::A, ModuleKind::B, ModuleKind::C}; break;
        case 1: beaten = {ModuleKind::A, ModuleKind::B, ModuleKind::F}; break;
        default: beaten = {ModuleKind::A, ModuleKind::C, ModuleKind::D}; break;
      }
      for (const auto kind : beaten) mt.orient(t, at(kind));
    }
  }
  layout.module_tournament_ = std::move(mt);
  layout.designated_ = layout.modules_[layout.section_module(n, ModuleKind::F)].range.end - 1;
  return layout;
}

GadgetLayout cnf_to_tournament(const MaxModelInstance& inst, const ReductionParams& p) {
  const auto check = check_params(p);
  if (!check.ok) {
    if (p.s1 < 1 || p.s2 < 1) throw InvalidInput("s1 and s2 must be positive");
    const int k = check.first_failure();
    throw InvalidInput("parameters s1=" + big_to_string(p.s1) + ", s2=" + big_to_string(p.s2) +
                       " violate inequality (" + std::to_string(k) + "), slack " +
                       big_to_string(check.slack[static_cast<std::size_t>(k - 1)]));
  }
  return build_gadget(inst, p);
}

Assignment ordering_to_assignment(const GadgetLayout& layout, const LinearOrder& module_order) {
  if (module_order.size() != layout.modules().size()) {
    throw InvalidInput("ordering has " + std::to_string(module_order.size()) +
                       " modules, layout has " + std::to_string(layout.modules().size()));
  }
  const auto pos = module_order.positions();
  Assignment a(layout.variable_count());
  for (std::size_t i = 1; i <= layout.variable_count(); ++i) {
    const auto d = pos[layout.section_module(i, ModuleKind::D)];
    const auto e = pos[layout.section_module(i, ModuleKind::E)];
    const auto f = pos[layout.section_module(i, ModuleKind::F)];
    a.set(i, d < e && e < f);
  }
  return a;
}

GadgetOrdering assignment_to_ordering(const GadgetLayout& layout, const Assignment& a) {
  const auto& cnf = layout.source().cnf;
  if (!evaluate(cnf, a)) throw InvalidInput("assignment does not satisfy the formula");
  const std::size_t n = layout.variable_count();
  std::vector<std::vector<std::size_t>> placed(n + 1);  // clause modules per section
  for (std::size_t j = 1; j <= layout.clause_count(); ++j) {
    std::size_t host = n + 1;
    for (const auto lit : cnf.clauses[j - 1]) {
      if (a.satisfies(lit)) host = std::min(host, static_cast<std::size_t>(std::abs(lit)));
    }
    placed[host].push_back(layout.clause_module(j));
  }
  std::vector<Vertex> seq;
  seq.reserve(layout.modules().size());
  for (std::size_t i = 1; i <= n; ++i) {
    const auto at = [&](ModuleKind kind) {
      return static_cast<Vertex>(layout.section_module(i, kind));
    };
    std::array<Vertex, 6> section{at(ModuleKind::A), at(ModuleKind::B), at(ModuleKind::C),
                                  at(ModuleKind::D), at(ModuleKind::E), at(ModuleKind::F)};
    if (!a[i]) section = {section[0], section[1], section[2], section[4], section[5], section[3]};
    seq.insert(seq.end(), section.begin(), section.end() - 1);
    for (const auto t : placed[i]) seq.push_back(static_cast<Vertex>(t));
    seq.push_back(section.back());
  }
  GadgetOrdering out;
  out.order = LinearOrder(std::move(seq));
  out.fas = weighted_fas(layout.quotient(), out.order);
  out.bound = assignment_bound(layout.params(), a);
  return out;
}

BigInt assignment_bound(const ReductionParams& p, const Assignment& a) {
  if (a.size() != p.n) {
    throw InvalidInput("assignment has " + std::to_string(a.size()) + " variables, expected " +
                       std::to_string(p.n));
  }
  const BigInt n = p.n;
  const BigInt m = p.m;
  const BigInt k = a.weight();
  BigInt b = n * p.s1 * p.s1 + 2 * (n - k) * p.s1;
  if (p.n > 0 && !a[p.n]) b += p.s1;
  return b + (3 * n - 1) * m * p.s1 * p.s2 + clause_terms(p);
}

BigInt baseline_bound(const ReductionParams& p) {
  const BigInt n = p.n;
  const BigInt m = p.m;
  return n * p.s1 * p.s1 + (3 * n - 1) * m * p.s1 * p.s2 + 3 * n * p.s1 + clause_terms(p);
}

BigInt quotient_lower_bound(const ReductionParams& p) { return BigInt(p.n) * p.s1 * p.s1; }

std::optional<std::string> structure_violation(const GadgetLayout& layout,
                                               const LinearOrder& module_order) {
  if (module_order.size() != layout.modules().size()) {
    return "ordering has " + std::to_string(module_order.size()) + " modules, layout has " +
           std::to_string(layout.modules().size());
  }
  const auto pos = module_order.positions();
  const auto name = [&](std::size_t mod) { return layout.modules()[mod].name(); };
  const std::size_t n = layout.variable_count();
  for (std::size_t i = 1; i <= n; ++i) {
    const auto at = [&](ModuleKind kind) { return layout.section_module(i, kind); };
    if (i < n) {
      std::size_t last = 0;
      std::size_t first_next = std::numeric_limits<std::size_t>::max();
      for (const auto kind : kSectionKinds) {
        last = std::max(last, pos[at(kind)]);
        first_next = std::min(first_next, pos[layout.section_module(i + 1, kind)]);
      }
      if (last > first_next) {
        return "section " + std::to_string(i + 1) + " starts before section " +
               std::to_string(i) + " ends";
      }
    }
    const auto a = pos[at(ModuleKind::A)];
    const auto b = pos[at(ModuleKind::B)];
    const auto c = pos[at(ModuleKind::C)];
    if (!(a < b && b < c)) {
      return name(at(ModuleKind::A)) + ", " + name(at(ModuleKind::B)) + ", " +
             name(at(ModuleKind::C)) + " are not in order";
    }
    const auto d = pos[at(ModuleKind::D)];
    const auto e = pos[at(ModuleKind::E)];
    const auto f = pos[at(ModuleKind::F)];
    if (c > std::min({d, e, f})) {
      return name(at(ModuleKind::C)) + " comes after one of D/E/F of section " +
             std::to_string(i);
    }
    const bool rotation = (d < e && e < f) || (e < f && f < d) || (f < d && d < e);
    if (!rotation) {
      return "D/E/F of section " + std::to_string(i) + " are not in a cyclic rotation";
    }
  }
  return std::nullopt;
}

bool decide_designated(const MaxModelInstance& inst, const ReductionParams& p,
                       const SolverCaps& caps) {
  const auto layout = cnf_to_tournament(inst, p);
  if (layout.modules().size() > caps.dp_nodes) {
    throw CapExceeded("gadget has " + std::to_string(layout.modules().size()) +
                      " modules; the quotient solver supports at most " +
                      std::to_string(caps.dp_nodes));
  }
  const auto t = layout.materialize();
  return is_slater_winner(t, layout.designated(), layout.partition(), caps);
}

}  // namespace slater
