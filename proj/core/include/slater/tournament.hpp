#pragma once

// Tournaments, linear orders, voter profiles, module partitions and weighted
// digraphs.
//
// Arc convention, used everywhere in this library: the arc (u, v) means that
// v beats u (the majority prefers v). The collective favorite of a transitive
// tournament is therefore its sink, and a LinearOrder lists candidates in
// ascending preference, so the last entry is the favorite.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace slater {

using Vertex = std::uint32_t;
using Weight = std::int64_t;
using Arc = std::pair<Vertex, Vertex>;

// Half-open vertex interval [begin, end).
struct VertexRange {
  Vertex begin = 0;
  Vertex end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool contains(Vertex v) const noexcept { return begin <= v && v < end; }
  friend bool operator==(const VertexRange&, const VertexRange&) = default;
};

// Complete antisymmetric arc relation stored as a dense bit matrix; row u
// holds the out-neighbourhood of u.
class Tournament {
 public:
  Tournament() = default;

  // Transitive tournament on n vertices with arcs (u, v) for every u < v.
  static Tournament transitive(std::size_t n);

  // Builds from an arc list that must contain exactly one arc per pair.
  static Tournament from_arcs(std::size_t n, std::span<const Arc> arcs);

  std::size_t size() const noexcept { return n_; }

  bool has_arc(Vertex u, Vertex v) const noexcept {
    return (bits_[u * stride_ + v / 64] >> (v % 64)) & 1U;
  }

  // Makes (from, to) the arc between the two vertices.
  void orient(Vertex from, Vertex to);

  // Orients every pair between two disjoint ranges as from -> to.
  void orient_all(VertexRange from, VertexRange to);

  std::size_t out_degree(Vertex u) const;

  std::span<const std::uint64_t> row(Vertex u) const {
    return {bits_.data() + u * stride_, stride_};
  }

  // Arcs in ascending (tail, head) order.
  std::vector<Arc> arcs() const;

  // Subtournament on `vertices`, relabelled 0..k-1 in the given order.
  Tournament induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  explicit Tournament(std::size_t n);

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

// A permutation of 0..n-1 in ascending preference.
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::vector<Vertex> sequence);

  static LinearOrder identity(std::size_t n);

  std::size_t size() const noexcept { return seq_.size(); }
  Vertex operator[](std::size_t i) const { return seq_[i]; }
  Vertex back() const { return seq_.back(); }
  auto begin() const noexcept { return seq_.begin(); }
  auto end() const noexcept { return seq_.end(); }
  const std::vector<Vertex>& sequence() const noexcept { return seq_; }

  // positions()[v] is the index of v in the order.
  std::vector<std::size_t> positions() const;
  LinearOrder reversed() const;

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
  friend auto operator<=>(const LinearOrder&, const LinearOrder&) = default;

 private:
  std::vector<Vertex> seq_;
};

struct Profile {
  std::size_t candidates = 0;
  std::vector<LinearOrder> voters;

  // Throws InvalidInput unless there is at least one voter and every voter
  // orders exactly the candidates 0..candidates-1.
  void validate() const;

  friend bool operator==(const Profile&, const Profile&) = default;
};

// Disjoint nonempty classes covering 0..n-1. Whether each class is a module
// of some tournament is a separate question (see verify_modules).
class ModulePartition {
 public:
  ModulePartition() = default;
  ModulePartition(std::size_t n, std::vector<std::vector<Vertex>> classes);

  static ModulePartition singletons(std::size_t n);
  static ModulePartition whole(std::size_t n);

  std::size_t vertex_count() const noexcept { return class_of_.size(); }
  std::size_t class_count() const noexcept { return classes_.size(); }
  const std::vector<std::vector<Vertex>>& classes() const noexcept { return classes_; }
  const std::vector<Vertex>& members(std::size_t c) const { return classes_[c]; }
  std::size_t class_of(Vertex v) const { return class_of_[v]; }

  friend bool operator==(const ModulePartition& a, const ModulePartition& b) {
    return a.classes_ == b.classes_;
  }

 private:
  std::vector<std::vector<Vertex>> classes_;
  std::vector<std::size_t> class_of_;
};

// Nonnegative integer weight per ordered pair, zero meaning no arc.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  explicit WeightedDigraph(std::size_t k) : k_(k), w_(k * k, 0) {}

  static WeightedDigraph from_tournament(const Tournament& t);

  std::size_t size() const noexcept { return k_; }
  Weight weight(Vertex u, Vertex v) const { return w_[u * k_ + v]; }
  void set_weight(Vertex u, Vertex v, Weight w);

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  std::size_t k_ = 0;
  std::vector<Weight> w_;
};

// Backward arcs of an ordering: (x, y) in t with y placed before x.
struct FasOfOrdering {
  std::vector<Arc> arcs;
  std::size_t size() const noexcept { return arcs.size(); }
};

FasOfOrdering fas_of_ordering(const Tournament& t, const LinearOrder& order);
std::size_t fas_size(const Tournament& t, const LinearOrder& order);
Weight weighted_fas(const WeightedDigraph& g, const LinearOrder& order);

// The unique order implying the empty fas, if t is acyclic.
std::optional<LinearOrder> transitive_order(const Tournament& t);
inline bool is_transitive(const Tournament& t) { return transitive_order(t).has_value(); }

// margin(a, b) = (#voters with a before b) - (#voters with b before a).
class PairMargins {
 public:
  PairMargins() = default;
  explicit PairMargins(std::size_t n) : n_(n), upper_(n * (n > 0 ? n - 1 : 0) / 2, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::int32_t margin(Vertex a, Vertex b) const;
  void add(Vertex a, Vertex b, std::int32_t delta);

 private:
  std::size_t index(Vertex lo, Vertex hi) const noexcept {
    return lo * (2 * n_ - lo - 1) / 2 + (hi - lo - 1);
  }

  std::size_t n_ = 0;
  std::vector<std::int32_t> upper_;
};

struct MajorityResult {
  Tournament tournament;
  PairMargins margins;
};

// Arc (a, b) iff strictly more voters rank a before b. Throws InvalidInput
// naming the first tied pair.
MajorityResult aggregate_majority(const Profile& profile);

struct ModuleViolation {
  Vertex x;  // x, y in the same class
  Vertex y;
  Vertex z;  // outside the class, related differently to x and y
  friend bool operator==(const ModuleViolation&, const ModuleViolation&) = default;
};

// First violating triple in class order, or nullopt if every class is a
// module of t. Throws InvalidInput if mp does not cover t's vertices.
std::optional<ModuleViolation> find_module_violation(const Tournament& t,
                                                     const ModulePartition& mp);
inline bool verify_modules(const Tournament& t, const ModulePartition& mp) {
  return !find_module_violation(t, mp).has_value();
}

struct SolverCaps;

struct Quotient {
  WeightedDigraph graph;
  // Minimum fas of the subtournament induced by each class.
  std::vector<Weight> internal_fas;
};

// One node per class, weight(i, j) = |M_i| |M_j| when the arcs point from M_i
// to M_j. Throws InvalidInput if some class is not a module.
Quotient quotient(const Tournament& t, const ModulePartition& mp, const SolverCaps& caps);
Quotient quotient(const Tournament& t, const ModulePartition& mp);

}  // namespace slater
