#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wgd {

using Vertex = std::size_t;

// How a loop of weight w at x contributes to d(x): w (kOnce) or 2w (kDouble).
enum class LoopMode { kOnce, kDouble };

std::string_view to_string(LoopMode mode) noexcept;

struct Neighbor {
  Vertex vertex;
  double weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct LabeledEdge {
  std::string u;
  std::string v;
  double weight;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

struct IndexedEdge {
  Vertex u;
  Vertex v;
  double weight;

  friend bool operator==(const IndexedEdge&, const IndexedEdge&) = default;
};

// Membership set over the dense vertex range [0, universe).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : member_(universe, 0) {}
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return member_.size(); }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(Vertex v) const noexcept {
    return v < member_.size() && member_[v] != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  // Members in ascending order.
  std::vector<Vertex> elements() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<char> member_;
  std::size_t count_ = 0;
};

// Undirected graph with strictly positive symmetric weights and optional
// loops. Immutable once constructed.
//
// Each adjacency list is ordered by (weight, neighbor). All degree sums walk
// the list in that order, so d(x), an induced degree over the full vertex
// set, and the degree of a relabeled copy of the same graph are bit-identical.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Edges with u == v are loops. Empty labels default to decimal indices.
  WeightedGraph(std::size_t n, std::span<const IndexedEdge> edges,
                LoopMode loop_mode = LoopMode::kDouble,
                std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return adjacency_.size(); }
  LoopMode loop_mode() const noexcept { return loop_mode_; }

  const std::string& label(Vertex x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;

  std::span<const Neighbor> neighbors(Vertex x) const {
    return adjacency_.at(x);
  }
  double loop_weight(Vertex x) const { return loops_.at(x); }
  double loop_contribution(Vertex x) const {
    return loop_mode_ == LoopMode::kDouble ? 2.0 * loops_[x] : loops_[x];
  }
  bool has_loops() const noexcept;

  double degree(Vertex x) const { return degree_.at(x); }
  double max_weight(Vertex x) const { return max_weight_.at(x); }

  // w_xy for x != y, w_xx for x == y, 0 when absent.
  double weight(Vertex x, Vertex y) const;

  // Sum of w_xy over neighbors y with in(y), plus x's loop contribution.
  // The caller is responsible for x itself being a member.
  template <class InSet>
  double degree_within(Vertex x, InSet&& in) const {
    double sum = 0.0;
    for (const Neighbor& nb : adjacency_[x]) {
      if (in(nb.vertex)) sum += nb.weight;
    }
    return sum + loop_contribution(x);
  }

  // Every edge once, u <= v, ascending by (u, v); loops included.
  std::vector<IndexedEdge> edges() const;

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> loops_;
  std::vector<double> degree_;
  std::vector<double> max_weight_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  LoopMode loop_mode_ = LoopMode::kDouble;
};

// Labels map to dense indices in order of first appearance.
WeightedGraph build_graph(std::span<const LabeledEdge> edges,
                          LoopMode loop_mode = LoopMode::kDouble);

double induced_degree(const WeightedGraph& g, const VertexSet& s, Vertex x);

struct DegreeProfile {
  std::vector<double> degree;
  std::vector<double> max_weight;
};

DegreeProfile degree_profile(const WeightedGraph& g);

// G(keep), reindexed densely; original[i] is the source vertex of i.
struct Subgraph {
  WeightedGraph graph;
  std::vector<Vertex> original;
};

Subgraph induced_subgraph(const WeightedGraph& g, const VertexSet& keep);

WeightedGraph without_loops(const WeightedGraph& g);

// Per-vertex demand pair (a(x), b(x)).
struct Demands {
  std::vector<double> a;
  std::vector<double> b;

  static Demands zero(std::size_t n) {
    return {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  }
  static Demands uniform(std::size_t n, double a, double b) {
    return {std::vector<double>(n, a), std::vector<double>(n, b)};
  }

  // Throws kInvalidDemands unless both vectors have n finite non-negative
  // entries.
  void validate(std::size_t n) const;
};

}  // namespace wgd
