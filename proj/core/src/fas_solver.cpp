#include "slater/fas_solver.hpp"

#include <bit>
#include <limits>
#include <string>

#include "slater/errors.hpp"

namespace slater {

std::string_view to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::brute_force:
      return "brute-force";
    case SolveMethod::subset_dp:
      return "subset-dp";
    case SolveMethod::module_quotient:
      return "module-quotient";
  }
  return "unknown";
}

namespace {

constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

void require_forced_in_range(const WeightedDigraph& g, std::optional<Vertex> forced_last) {
  if (forced_last && *forced_last >= g.size()) {
    throw InvalidInput("forced last node " + std::to_string(*forced_last) + " out of range");
  }
}

class BruteForce {
 public:
  BruteForce(const WeightedDigraph& g, std::optional<Vertex> last)
      : g_(g), last_(last), used_(g.size(), false) {
    prefix_.reserve(g.size());
  }

  SolveResult run() {
    search(0);
    return {best_value_, LinearOrder(best_), SolveMethod::brute_force};
  }

 private:
  void search(Weight cost) {
    const std::size_t k = g_.size();
    if (prefix_.size() == k) {
      if (cost < best_value_) {
        best_value_ = cost;
        best_ = prefix_;
      }
      return;
    }
    for (Vertex x = 0; x < k; ++x) {
      if (used_[x]) continue;
      if (last_ && x == *last_ && prefix_.size() + 1 != k) continue;
      Weight add = 0;
      for (const auto u : prefix_) add += g_.weight(x, u);
      used_[x] = true;
      prefix_.push_back(x);
      search(cost + add);
      prefix_.pop_back();
      used_[x] = false;
    }
  }

  const WeightedDigraph& g_;
  std::optional<Vertex> last_;
  std::vector<bool> used_;
  std::vector<Vertex> prefix_;
  std::vector<Vertex> best_;
  Weight best_value_ = kInfinity;
};

// in(x, S): total weight of arcs from x into the node set S, answered with two
// table lookups by splitting S into low and high bits.
class ArcsInto {
 public:
  explicit ArcsInto(const WeightedDigraph& g)
      : k_(g.size()),
        lo_bits_(k_ < 12 ? k_ : 12),
        hi_bits_(k_ - lo_bits_),
        lo_(k_ << lo_bits_, 0),
        hi_(k_ << hi_bits_, 0) {
    for (Vertex x = 0; x < k_; ++x) {
      Weight* lo = lo_.data() + (std::size_t{x} << lo_bits_);
      for (std::uint32_t s = 1; s < (1U << lo_bits_); ++s) {
        lo[s] = lo[s & (s - 1)] + g.weight(x, static_cast<Vertex>(std::countr_zero(s)));
      }
      Weight* hi = hi_.data() + (std::size_t{x} << hi_bits_);
      for (std::uint32_t s = 1; s < (1U << hi_bits_); ++s) {
        hi[s] = hi[s & (s - 1)] +
                g.weight(x, static_cast<Vertex>(lo_bits_ + std::countr_zero(s)));
      }
    }
  }

  Weight operator()(Vertex x, std::uint32_t set) const {
    const std::uint32_t lo_mask = (1U << lo_bits_) - 1;
    return lo_[(std::size_t{x} << lo_bits_) | (set & lo_mask)] +
           hi_[(std::size_t{x} << hi_bits_) | (set >> lo_bits_)];
  }

 private:
  std::size_t k_;
  std::size_t lo_bits_;
  std::size_t hi_bits_;
  std::vector<Weight> lo_;
  std::vector<Weight> hi_;
};

void require_dp_cap(std::size_t k, const SolverCaps& caps) {
  if (k > caps.dp_nodes || k > 30) {
    throw CapExceeded("subset DP supports at most " + std::to_string(caps.dp_nodes) +
                      " nodes, got " + std::to_string(k));
  }
}

// Best cost of completing an order of `universe` when the nodes of S are
// already placed, for every S within universe; then the lexicographically
// smallest optimal order of universe.
struct Completion {
  Weight value = 0;
  std::vector<Vertex> order;
};

Completion best_completion(const ArcsInto& in, std::size_t k, std::uint32_t universe) {
  std::vector<Weight> rest(std::size_t{1} << k, kInfinity);
  rest[universe] = 0;
  for (std::uint32_t s = universe; s-- > 0;) {
    if ((s & ~universe) != 0) continue;
    Weight best = kInfinity;
    for (std::uint32_t open = universe & ~s; open != 0; open &= open - 1) {
      const auto x = static_cast<Vertex>(std::countr_zero(open));
      const Weight v = in(x, s) + rest[s | (1U << x)];
      if (v < best) best = v;
    }
    rest[s] = best;
  }
  Completion c{rest[0], {}};
  std::uint32_t s = 0;
  while (s != universe) {
    for (std::uint32_t open = universe & ~s; open != 0; open &= open - 1) {
      const auto x = static_cast<Vertex>(std::countr_zero(open));
      if (in(x, s) + rest[s | (1U << x)] == rest[s]) {
        c.order.push_back(x);
        s |= 1U << x;
        break;
      }
    }
  }
  return c;
}

}  // namespace

SolveResult min_fas_bruteforce(const WeightedDigraph& g, std::optional<Vertex> forced_last,
                               const SolverCaps& caps) {
  if (g.size() > caps.brute_force_nodes) {
    throw CapExceeded("brute force supports at most " + std::to_string(caps.brute_force_nodes) +
                      " nodes, got " + std::to_string(g.size()));
  }
  require_forced_in_range(g, forced_last);
  return BruteForce(g, forced_last).run();
}

SolveResult min_fas_bruteforce(const Tournament& t, std::optional<Vertex> forced_last,
                               const SolverCaps& caps) {
  if (t.size() > caps.brute_force_nodes) {
    throw CapExceeded("brute force supports at most " + std::to_string(caps.brute_force_nodes) +
                      " nodes, got " + std::to_string(t.size()));
  }
  return min_fas_bruteforce(WeightedDigraph::from_tournament(t), forced_last, caps);
}

SolveResult min_fas_dp(const WeightedDigraph& g, std::optional<Vertex> forced_last,
                       const SolverCaps& caps) {
  const std::size_t k = g.size();
  require_dp_cap(k, caps);
  require_forced_in_range(g, forced_last);
  const ArcsInto in(g);
  const std::uint32_t full = k == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << k) - 1);
  const std::uint32_t universe = forced_last ? full & ~(1U << *forced_last) : full;
  auto c = best_completion(in, k, universe);
  if (forced_last) {
    c.value += in(*forced_last, universe);
    c.order.push_back(*forced_last);
  }
  return {c.value, LinearOrder(std::move(c.order)), SolveMethod::subset_dp};
}

SolveResult min_fas_dp(const Tournament& t, std::optional<Vertex> forced_last,
                       const SolverCaps& caps) {
  require_dp_cap(t.size(), caps);
  return min_fas_dp(WeightedDigraph::from_tournament(t), forced_last, caps);
}

ForcedLastTable forced_last_table(const WeightedDigraph& g, const SolverCaps& caps) {
  const std::size_t k = g.size();
  require_dp_cap(k, caps);
  const ArcsInto in(g);
  // prefix[S]: cheapest arrangement of S as the first |S| positions.
  std::vector<Weight> prefix(std::size_t{1} << k, 0);
  for (std::uint32_t s = 1; s < prefix.size(); ++s) {
    Weight best = kInfinity;
    for (std::uint32_t rem = s; rem != 0; rem &= rem - 1) {
      const auto x = static_cast<Vertex>(std::countr_zero(rem));
      const std::uint32_t before = s & ~(1U << x);
      const Weight v = prefix[before] + in(x, before);
      if (v < best) best = v;
    }
    prefix[s] = best;
  }
  const std::uint32_t full = static_cast<std::uint32_t>(prefix.size() - 1);
  ForcedLastTable table{prefix[full], std::vector<Weight>(k, 0)};
  for (Vertex v = 0; v < k; ++v) {
    const std::uint32_t others = full & ~(1U << v);
    table.forced_last[v] = prefix[others] + in(v, others);
  }
  return table;
}

}  // namespace slater
