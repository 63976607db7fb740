#include "wgd/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "wgd/error.hpp"

namespace wgd {

std::string_view to_string(LoopMode mode) noexcept {
  return mode == LoopMode::kOnce ? "once" : "double";
}

// ── VertexSet ──────────────────────────────────────────────────────────

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : member_(universe, 0) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.member_.begin(), s.member_.end(), 1);
  s.count_ = universe;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= member_.size()) {
    throw Error(ErrorKind::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " outside universe");
  }
  if (member_[v] == 0) {
    member_[v] = 1;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  if (contains(v)) {
    member_[v] = 0;
    --count_;
  }
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe());
  for (Vertex v = 0; v < universe(); ++v) {
    if (member_[v] == 0) out.insert(v);
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (Vertex v = 0; v < universe(); ++v) {
    if (member_[v] != 0 && !other.contains(v)) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (Vertex v = 0; v < universe(); ++v) {
    if (member_[v] != 0 && other.contains(v)) return true;
  }
  return false;
}

std::vector<Vertex> VertexSet::elements() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (Vertex v = 0; v < universe(); ++v) {
    if (member_[v] != 0) out.push_back(v);
  }
  return out;
}

// ── WeightedGraph ──────────────────────────────────────────────────────

WeightedGraph::WeightedGraph(std::size_t n, std::span<const IndexedEdge> edges,
                             LoopMode loop_mode,
                             std::vector<std::string> labels)
    : adjacency_(n),
      loops_(n, 0.0),
      degree_(n, 0.0),
      max_weight_(n, 0.0),
      labels_(std::move(labels)),
      loop_mode_(loop_mode) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (Vertex x = 0; x < n; ++x) labels_.push_back(std::to_string(x));
  }
  if (labels_.size() != n) {
    throw Error(ErrorKind::kInvalidArgument, "label count does not match n");
  }
  for (Vertex x = 0; x < n; ++x) {
    if (!index_.emplace(labels_[x], x).second) {
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate vertex label '" + labels_[x] + "'");
    }
  }

  std::set<std::pair<Vertex, Vertex>> seen;
  for (const IndexedEdge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorKind::kVertexOutOfRange, "edge endpoint out of range");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(ErrorKind::kNonPositiveWeight,
                  "edge (" + labels_[e.u] + "," + labels_[e.v] +
                      ") has non-positive or non-finite weight");
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw Error(ErrorKind::kDuplicateEdge, "edge (" + labels_[e.u] + "," +
                                                 labels_[e.v] +
                                                 ") listed twice");
    }
    if (e.u == e.v) {
      loops_[e.u] = e.weight;
    } else {
      adjacency_[e.u].push_back({e.v, e.weight});
      adjacency_[e.v].push_back({e.u, e.weight});
    }
  }

  for (Vertex x = 0; x < n; ++x) {
    auto& adj = adjacency_[x];
    std::sort(adj.begin(), adj.end(), [](const Neighbor& l, const Neighbor& r) {
      return l.weight != r.weight ? l.weight < r.weight : l.vertex < r.vertex;
    });
    degree_[x] = degree_within(x, [](Vertex) { return true; });
    max_weight_[x] = adj.empty() ? 0.0 : adj.back().weight;
  }
}

std::optional<Vertex> WeightedGraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool WeightedGraph::has_loops() const noexcept {
  return std::any_of(loops_.begin(), loops_.end(),
                     [](double w) { return w > 0.0; });
}

double WeightedGraph::weight(Vertex x, Vertex y) const {
  if (x == y) return loops_.at(x);
  for (const Neighbor& nb : adjacency_.at(x)) {
    if (nb.vertex == y) return nb.weight;
  }
  return 0.0;
}

std::vector<IndexedEdge> WeightedGraph::edges() const {
  std::vector<IndexedEdge> out;
  for (Vertex x = 0; x < size(); ++x) {
    if (loops_[x] > 0.0) out.push_back({x, x, loops_[x]});
    std::vector<Neighbor> higher;
    for (const Neighbor& nb : adjacency_[x]) {
      if (nb.vertex > x) higher.push_back(nb);
    }
    std::sort(higher.begin(), higher.end(),
              [](const Neighbor& l, const Neighbor& r) {
                return l.vertex < r.vertex;
              });
    for (const Neighbor& nb : higher) out.push_back({x, nb.vertex, nb.weight});
  }
  return out;
}

// ── free functions ─────────────────────────────────────────────────────

WeightedGraph build_graph(std::span<const LabeledEdge> edges,
                          LoopMode loop_mode) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.emplace(label, labels.size());
    if (inserted) labels.push_back(label);
    return it->second;
  };
  std::vector<IndexedEdge> indexed;
  indexed.reserve(edges.size());
  for (const LabeledEdge& e : edges) {
    Vertex u = intern(e.u);
    Vertex v = intern(e.v);
    indexed.push_back({u, v, e.weight});
  }
  const std::size_t n = labels.size();
  return WeightedGraph(n, indexed, loop_mode, std::move(labels));
}

double induced_degree(const WeightedGraph& g, const VertexSet& s, Vertex x) {
  if (!s.contains(x)) {
    throw Error(ErrorKind::kVertexNotInSet,
                "vertex " + std::to_string(x) + " is not in the set");
  }
  return g.degree_within(x, [&](Vertex y) { return s.contains(y); });
}

DegreeProfile degree_profile(const WeightedGraph& g) {
  DegreeProfile p;
  p.degree.reserve(g.size());
  p.max_weight.reserve(g.size());
  for (Vertex x = 0; x < g.size(); ++x) {
    p.degree.push_back(g.degree(x));
    p.max_weight.push_back(g.max_weight(x));
  }
  return p;
}

Subgraph induced_subgraph(const WeightedGraph& g, const VertexSet& keep) {
  Subgraph sub;
  std::vector<Vertex> remap(g.size(), g.size());
  std::vector<std::string> labels;
  for (Vertex x : keep.elements()) {
    remap[x] = sub.original.size();
    sub.original.push_back(x);
    labels.push_back(g.label(x));
  }
  std::vector<IndexedEdge> edges;
  for (const IndexedEdge& e : g.edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) {
      edges.push_back({remap[e.u], remap[e.v], e.weight});
    }
  }
  sub.graph = WeightedGraph(sub.original.size(), edges, g.loop_mode(),
                            std::move(labels));
  return sub;
}

WeightedGraph without_loops(const WeightedGraph& g) {
  std::vector<IndexedEdge> edges;
  for (const IndexedEdge& e : g.edges()) {
    if (e.u != e.v) edges.push_back(e);
  }
  return WeightedGraph(g.size(), edges, g.loop_mode(), g.labels());
}

void Demands::validate(std::size_t n) const {
  if (a.size() != n || b.size() != n) {
    throw Error(ErrorKind::kInvalidDemands,
                "demand vectors must have one entry per vertex");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!std::isfinite(a[x]) || !std::isfinite(b[x]) || a[x] < 0.0 ||
        b[x] < 0.0) {
      throw Error(ErrorKind::kInvalidDemands,
                  "demands at vertex " + std::to_string(x) +
                      " must be finite and non-negative");
    }
  }
}

}  // namespace wgd
