#pragma once

// Core data model: simple undirected graphs over vertices 1..n, links
// (candidate extra edges), and augmentation instances.

#include <algorithm>
#include <cassert>
#include <compare>
#include <span>
#include <stdexcept>
#include <vector>

namespace augment {

using Vertex = int;

// Unordered pair of distinct vertices, normalized so that u < v.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
    assert(a != b && "vertex pair endpoints must be distinct");
  }

  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const {
    assert(touches(w));
    return u == w ? v : u;
  }

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

using Link = VertexPair;

// Sorted-vector set helpers. All vertex sets in this library are kept as
// sorted vectors without duplicates.
inline bool sorted_contains(std::span<const Vertex> s, Vertex w) {
  return std::binary_search(s.begin(), s.end(), w);
}

inline std::vector<Vertex> sorted_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Vertex> sorted_intersection(std::span<const Vertex> a,
                                               std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Vertex> sorted_difference(std::span<const Vertex> a,
                                             std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Vertex> sorted_unique(std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// Simple undirected graph. Vertices are the integers 1..n; neighbor lists
// are kept sorted. No self-loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  bool has_edge(Vertex a, Vertex b) const {
    if (a == b || !contains(a) || !contains(b)) return false;
    const auto& na = adj_[a];
    return std::binary_search(na.begin(), na.end(), b);
  }
  bool has_edge(VertexPair e) const { return has_edge(e.u, e.v); }

  // Inserts the edge if absent. Returns false when it was already present.
  bool add_edge(Vertex a, Vertex b) {
    assert(contains(a) && contains(b));
    assert(a != b && "no self-loops");
    auto& na = adj_[a];
    auto it = std::lower_bound(na.begin(), na.end(), b);
    if (it != na.end() && *it == b) return false;
    na.insert(it, b);
    auto& nb = adj_[b];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++m_;
    return true;
  }
  bool add_edge(VertexPair e) { return add_edge(e.u, e.v); }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    assert(contains(v));
    return adj_[v];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  // N[v], sorted.
  std::vector<Vertex> closed_neighborhood(Vertex v) const {
    std::vector<Vertex> out = neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[i] = i + 1;
    return out;
  }

  // All edges as normalized pairs, lexicographically sorted.
  std::vector<VertexPair> edges() const {
    std::vector<VertexPair> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 1; u <= n_; ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  bool is_clique() const { return 2 * m_ == n_ * (n_ - 1); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

// Graph with edge set E(g) union s. The input graph is not modified; links
// already present as edges are absorbed by the set union.
inline Graph add_links(const Graph& g, std::span<const Link> s) {
  Graph out = g;
  for (const Link& l : s) {
    if (!out.contains(l.u) || !out.contains(l.v))
      throw std::invalid_argument("link endpoint out of range");
    out.add_edge(l);
  }
  return out;
}

enum class Mode { vertex, edge };

// An augmentation instance: make `graph` lambda-connected (in `mode`) by
// inserting at most `budget_k` links drawn from `links`.
struct Instance {
  Graph graph;
  std::vector<Link> links;  // sorted, distinct, disjoint from graph edges
  int lambda = 1;
  int budget_k = 0;
  Mode mode = Mode::edge;

  bool has_link(Link l) const {
    return std::binary_search(links.begin(), links.end(), l);
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

using Solution = std::vector<Link>;

inline void validate_instance(const Instance& inst) {
  if (inst.graph.vertex_count() < 1)
    throw std::invalid_argument("instance needs at least one vertex");
  if (inst.lambda < 1) throw std::invalid_argument("lambda must be at least 1");
  if (inst.budget_k < 0) throw std::invalid_argument("budget must be nonnegative");
  if (!std::is_sorted(inst.links.begin(), inst.links.end()))
    throw std::invalid_argument("links must be sorted");
  for (std::size_t i = 0; i < inst.links.size(); ++i) {
    const Link& l = inst.links[i];
    if (!inst.graph.contains(l.u) || !inst.graph.contains(l.v))
      throw std::invalid_argument("link endpoint out of range");
    if (inst.graph.has_edge(l)) throw std::invalid_argument("link duplicates edge");
    if (i > 0 && inst.links[i - 1] == l) throw std::invalid_argument("duplicate link");
  }
}

}  // namespace augment
