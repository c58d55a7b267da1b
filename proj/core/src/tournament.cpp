#include "slater/tournament.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "slater/errors.hpp"

namespace slater {

namespace {

constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v % 64); }

// Sets or clears bits [begin, end) of a row.
void fill_range(std::uint64_t* row, Vertex begin, Vertex end, bool value) {
  while (begin < end) {
    const std::size_t word = begin / 64;
    const unsigned lo = begin % 64;
    const unsigned span = std::min<std::size_t>(64 - lo, end - begin);
    const std::uint64_t mask = span == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << span) - 1) << lo;
    if (value) {
      row[word] |= mask;
    } else {
      row[word] &= ~mask;
    }
    begin += span;
  }
}

}  // namespace

Tournament::Tournament(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

Tournament Tournament::transitive(std::size_t n) {
  Tournament t(n);
  for (Vertex u = 0; u < n; ++u) {
    fill_range(t.bits_.data() + u * t.stride_, u + 1, static_cast<Vertex>(n), true);
  }
  return t;
}

Tournament Tournament::from_arcs(std::size_t n, std::span<const Arc> arcs) {
  Tournament t(n);
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) {
      throw InvalidInput("arc (" + std::to_string(u) + "," + std::to_string(v) +
                         ") references a vertex outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) {
      throw InvalidInput("self-arc at vertex " + std::to_string(u));
    }
    if (t.has_arc(u, v) || t.has_arc(v, u)) {
      throw InvalidInput("pair {" + std::to_string(u) + "," + std::to_string(v) +
                         "} has more than one arc");
    }
    t.bits_[u * t.stride_ + v / 64] |= bit(v);
  }
  if (arcs.size() != n * (n - (n > 0 ? 1 : 0)) / 2) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!t.has_arc(u, v) && !t.has_arc(v, u)) {
          throw InvalidInput("pair {" + std::to_string(u) + "," + std::to_string(v) +
                             "} has no arc");
        }
      }
    }
  }
  return t;
}

void Tournament::orient(Vertex from, Vertex to) {
  if (from == to || from >= n_ || to >= n_) {
    throw InvalidInput("cannot orient (" + std::to_string(from) + "," + std::to_string(to) + ")");
  }
  bits_[from * stride_ + to / 64] |= bit(to);
  bits_[to * stride_ + from / 64] &= ~bit(from);
}

void Tournament::orient_all(VertexRange from, VertexRange to) {
  if (from.end > n_ || to.end > n_ ||
      (from.begin < to.end && to.begin < from.end && from.size() > 0 && to.size() > 0)) {
    throw InvalidInput("orient_all needs disjoint in-range vertex ranges");
  }
  for (Vertex u = from.begin; u < from.end; ++u) {
    fill_range(bits_.data() + u * stride_, to.begin, to.end, true);
  }
  for (Vertex v = to.begin; v < to.end; ++v) {
    fill_range(bits_.data() + v * stride_, from.begin, from.end, false);
  }
}

std::size_t Tournament::out_degree(Vertex u) const {
  std::size_t d = 0;
  for (const auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Arc> Tournament::arcs() const {
  std::vector<Arc> out;
  out.reserve(n_ * (n_ > 0 ? n_ - 1 : 0) / 2);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      if (u != v && has_arc(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Tournament Tournament::induced(std::span<const Vertex> vertices) const {
  Tournament sub(vertices.size());
  for (Vertex i = 0; i < vertices.size(); ++i) {
    for (Vertex j = 0; j < vertices.size(); ++j) {
      if (i != j && has_arc(vertices[i], vertices[j])) {
        sub.bits_[i * sub.stride_ + j / 64] |= bit(j);
      }
    }
  }
  return sub;
}

LinearOrder::LinearOrder(std::vector<Vertex> sequence) : seq_(std::move(sequence)) {
  std::vector<bool> seen(seq_.size(), false);
  for (const auto v : seq_) {
    if (v >= seq_.size() || seen[v]) {
      throw InvalidInput("order is not a permutation of 0.." + std::to_string(seq_.size()) +
                         "-1 (offending entry " + std::to_string(v) + ")");
    }
    seen[v] = true;
  }
}

LinearOrder LinearOrder::identity(std::size_t n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  return LinearOrder(std::move(seq));
}

std::vector<std::size_t> LinearOrder::positions() const {
  std::vector<std::size_t> pos(seq_.size());
  for (std::size_t i = 0; i < seq_.size(); ++i) pos[seq_[i]] = i;
  return pos;
}

LinearOrder LinearOrder::reversed() const {
  return LinearOrder(std::vector<Vertex>(seq_.rbegin(), seq_.rend()));
}

void Profile::validate() const {
  if (voters.empty()) throw InvalidInput("profile has no voters");
  for (std::size_t i = 0; i < voters.size(); ++i) {
    if (voters[i].size() != candidates) {
      throw InvalidInput("voter " + std::to_string(i) + " orders " +
                         std::to_string(voters[i].size()) + " candidates, expected " +
                         std::to_string(candidates));
    }
  }
}

ModulePartition::ModulePartition(std::size_t n, std::vector<std::vector<Vertex>> classes)
    : classes_(std::move(classes)), class_of_(n, static_cast<std::size_t>(-1)) {
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c].empty()) throw InvalidInput("class " + std::to_string(c) + " is empty");
    for (const auto v : classes_[c]) {
      if (v >= n) {
        throw InvalidInput("class " + std::to_string(c) + " contains vertex " +
                           std::to_string(v) + " outside 0.." + std::to_string(n) + "-1");
      }
      if (class_of_[v] != static_cast<std::size_t>(-1)) {
        throw InvalidInput("vertex " + std::to_string(v) + " appears in classes " +
                           std::to_string(class_of_[v]) + " and " + std::to_string(c));
      }
      class_of_[v] = c;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (class_of_[v] == static_cast<std::size_t>(-1)) {
      throw InvalidInput("vertex " + std::to_string(v) + " is in no class");
    }
  }
}

ModulePartition ModulePartition::singletons(std::size_t n) {
  std::vector<std::vector<Vertex>> classes(n);
  for (Vertex v = 0; v < n; ++v) classes[v] = {v};
  return ModulePartition(n, std::move(classes));
}

ModulePartition ModulePartition::whole(std::size_t n) {
  if (n == 0) return ModulePartition(0, {});
  return ModulePartition(n, {LinearOrder::identity(n).sequence()});
}

WeightedDigraph WeightedDigraph::from_tournament(const Tournament& t) {
  WeightedDigraph g(t.size());
  for (Vertex u = 0; u < t.size(); ++u) {
    for (Vertex v = 0; v < t.size(); ++v) {
      if (u != v && t.has_arc(u, v)) g.w_[u * g.k_ + v] = 1;
    }
  }
  return g;
}

void WeightedDigraph::set_weight(Vertex u, Vertex v, Weight w) {
  if (u >= k_ || v >= k_) throw InvalidInput("weight index out of range");
  if (u == v && w != 0) throw InvalidInput("self-loop weight must be zero");
  if (w < 0) throw InvalidInput("negative arc weight");
  w_[u * k_ + v] = w;
}

namespace {

void require_same_size(const Tournament& t, const LinearOrder& order) {
  if (order.size() != t.size()) {
    throw InvalidInput("order covers " + std::to_string(order.size()) +
                       " candidates but the tournament has " + std::to_string(t.size()));
  }
}

}  // namespace

FasOfOrdering fas_of_ordering(const Tournament& t, const LinearOrder& order) {
  require_same_size(t, order);
  FasOfOrdering fas;
  const auto& seq = order.sequence();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      // seq[i] precedes seq[j]; the arc is backward when it points to seq[i].
      if (t.has_arc(seq[j], seq[i])) fas.arcs.emplace_back(seq[j], seq[i]);
    }
  }
  std::sort(fas.arcs.begin(), fas.arcs.end());
  return fas;
}

std::size_t fas_size(const Tournament& t, const LinearOrder& order) {
  require_same_size(t, order);
  std::size_t count = 0;
  const auto& seq = order.sequence();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (t.has_arc(seq[j], seq[i])) ++count;
    }
  }
  return count;
}

Weight weighted_fas(const WeightedDigraph& g, const LinearOrder& order) {
  if (order.size() != g.size()) throw InvalidInput("order size does not match digraph");
  Weight total = 0;
  const auto& seq = order.sequence();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) total += g.weight(seq[j], seq[i]);
  }
  return total;
}

std::optional<LinearOrder> transitive_order(const Tournament& t) {
  // A tournament is transitive iff its out-degrees are pairwise distinct; the
  // source (out-degree n-1) comes first.
  const std::size_t n = t.size();
  std::vector<Vertex> by_rank(n, 0);
  std::vector<bool> taken(n, false);
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = t.out_degree(v);
    const std::size_t rank = n - 1 - d;
    if (taken[rank]) return std::nullopt;
    taken[rank] = true;
    by_rank[rank] = v;
  }
  return LinearOrder(std::move(by_rank));
}

std::int32_t PairMargins::margin(Vertex a, Vertex b) const {
  if (a == b) return 0;
  return a < b ? upper_[index(a, b)] : -upper_[index(b, a)];
}

void PairMargins::add(Vertex a, Vertex b, std::int32_t delta) {
  if (a < b) {
    upper_[index(a, b)] += delta;
  } else {
    upper_[index(b, a)] -= delta;
  }
}

}  // namespace slater
