#include "slater/formulas.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#include "slater/errors.hpp"

namespace slater {

void Cnf::validate() const {
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& clause = clauses[c];
    if (clause.empty() || clause.size() > 3) {
      throw InvalidInput("clause " + std::to_string(c + 1) + " has " +
                         std::to_string(clause.size()) + " literals; expected 1 to 3");
    }
    for (const auto lit : clause) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > num_vars) {
        throw InvalidInput("clause " + std::to_string(c + 1) + " has literal " +
                           std::to_string(lit) + " outside 1.." + std::to_string(num_vars));
      }
    }
  }
}

Assignment Assignment::from_mask(std::size_t num_vars, std::uint64_t mask) {
  Assignment a(num_vars);
  for (std::size_t v = 0; v < num_vars; ++v) a.bits[v] = (mask >> v) & 1U;
  return a;
}

bool Assignment::satisfies(Literal lit) const {
  const bool value = (*this)[static_cast<std::size_t>(std::abs(lit))];
  return lit > 0 ? value : !value;
}

std::size_t Assignment::weight() const {
  std::size_t w = 0;
  for (const bool b : bits) w += b ? 1 : 0;
  return w;
}

bool evaluate(const Cnf& cnf, const Assignment& a) {
  if (a.size() != cnf.num_vars) {
    throw InvalidInput("assignment has " + std::to_string(a.size()) + " variables, formula has " +
                       std::to_string(cnf.num_vars));
  }
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (const auto lit : clause) sat = sat || a.satisfies(lit);
    if (!sat) return false;
  }
  return true;
}

void MaxModelInstance::validate() const {
  cnf.validate();
  if (dvar < 1 || dvar > cnf.num_vars) {
    throw InvalidInput("distinguished variable " + std::to_string(dvar) + " outside 1.." +
                       std::to_string(cnf.num_vars));
  }
  for (std::size_t c = 0; c < cnf.clauses.size(); ++c) {
    bool has_negative = false;
    for (const auto lit : cnf.clauses[c]) has_negative = has_negative || lit < 0;
    if (!has_negative) {
      throw InvalidInput("clause " + std::to_string(c + 1) +
                         " has no negative literal, so the all-False assignment falsifies it");
    }
  }
}

void PartitionedCnf::validate() const {
  instance.validate();
  if (sides.size() != instance.cnf.clauses.size()) {
    throw InvalidInput("partition tags " + std::to_string(sides.size()) + " clauses, formula has " +
                       std::to_string(instance.cnf.clauses.size()));
  }
  // first_seen[side][literal slot] = 1-based clause index or 0
  const std::size_t n = instance.cnf.num_vars;
  std::vector<std::size_t> seen_left(2 * n + 1, 0), seen_right(2 * n + 1, 0);
  for (std::size_t c = 0; c < sides.size(); ++c) {
    auto& seen = sides[c] == Side::L ? seen_left : seen_right;
    for (const auto lit : instance.cnf.clauses[c]) {
      const auto slot = static_cast<std::size_t>(lit + static_cast<Literal>(n));
      if (seen[slot] != 0 && seen[slot] != c + 1) {
        throw InvalidInput("literal " + std::to_string(lit) + " occurs in clauses " +
                           std::to_string(seen[slot]) + " and " + std::to_string(c + 1) +
                           " of side " + static_cast<char>(sides[c]));
      }
      seen[slot] = c + 1;
    }
  }
}

bool PartitionedCnf::variable_once_in_left() const {
  std::vector<std::size_t> seen(instance.cnf.num_vars + 1, 0);
  for (std::size_t c = 0; c < sides.size(); ++c) {
    if (sides[c] != Side::L) continue;
    for (const auto lit : instance.cnf.clauses[c]) {
      auto& slot = seen[static_cast<std::size_t>(std::abs(lit))];
      if (slot != 0 && slot != c + 1) return false;
      slot = c + 1;
    }
  }
  return true;
}

MaxModelResult max_model_decide(const MaxModelInstance& inst, std::size_t var_cap) {
  inst.validate();
  const std::size_t n = inst.cnf.num_vars;
  if (n > var_cap) {
    throw CapExceeded("Max Model enumeration supports at most " + std::to_string(var_cap) +
                      " variables, got " + std::to_string(n));
  }
  // A clause is satisfied iff (mask & pos) | (~mask & neg) is nonzero.
  struct Masks {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
  };
  std::vector<Masks> clauses;
  clauses.reserve(inst.cnf.clauses.size());
  for (const auto& clause : inst.cnf.clauses) {
    Masks m;
    for (const auto lit : clause) {
      const std::uint64_t b = std::uint64_t{1} << (std::abs(lit) - 1);
      (lit > 0 ? m.pos : m.neg) |= b;
    }
    clauses.push_back(m);
  }
  const std::uint64_t dbit = std::uint64_t{1} << (inst.dvar - 1);

  std::size_t best = 0;
  std::uint64_t first_best = 0;
  bool found_true = false;
  std::uint64_t first_true = 0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    const auto w = static_cast<std::size_t>(std::popcount(mask));
    if (w < best) continue;
    bool sat = true;
    for (const auto& c : clauses) {
      if (((mask & c.pos) | (~mask & c.neg)) == 0) {
        sat = false;
        break;
      }
    }
    if (!sat) continue;
    if (w > best) {
      best = w;
      first_best = mask;
      found_true = false;
    }
    if (!found_true && (mask & dbit) != 0) {
      found_true = true;
      first_true = mask;
    }
  }
  // all-False is a model, so best/first_best are always initialised correctly.
  return {found_true, best, Assignment::from_mask(n, found_true ? first_true : first_best)};
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n || v >= n) {
    throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} outside 0.." + std::to_string(n) + "-1");
  }
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  if (!edges.emplace(u, v).second) {
    throw InvalidInput("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return edges.contains({u, v});
}

IndependentSetParity max_independent_set_parity(const Graph& g, std::size_t cap) {
  if (g.n > cap) {
    throw CapExceeded("independent set enumeration supports at most " + std::to_string(cap) +
                      " vertices, got " + std::to_string(g.n));
  }
  std::vector<std::uint32_t> adj(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1U << g.n); ++s) {
    bool independent = true;
    for (std::uint32_t rem = s; rem != 0 && independent; rem &= rem - 1) {
      independent = (adj[std::countr_zero(rem)] & s) == 0;
    }
    if (independent) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return {best, best % 2 == 1};
}

}  // namespace slater
