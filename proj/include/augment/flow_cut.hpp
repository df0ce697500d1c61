#pragma once

// Exact minimum vertex separations and edge cuts with side constraints,
// extreme ("leftmost"/"rightmost") minimum solutions, and connectivity
// tests. This is the primitive layer everything else calls into.
//
// A separation of G is a pair (A,B) of vertex sets with A u B = V(G) and no
// edge between A\B and B\A; its separator is A n B and its order |A n B|.
// A cut is a bipartition (A,B); its order is the number of crossing edges.
//
// Vertex separations are computed on the standard node-splitting network:
// each vertex v becomes v_in -> v_out with unit capacity (the separator
// candidates), edges become infinite-capacity arcs in both directions.
// After a maximum flow, residual reachability from the source yields the
// unique inclusion-minimal "A" side; co-reachability of the sink yields the
// inclusion-maximal one.

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "augment/core.hpp"
#include "augment/maxflow.hpp"

namespace augment {

struct Separation {
  std::vector<Vertex> side_a;  // sorted
  std::vector<Vertex> side_b;  // sorted; side_a u side_b = V

  bool in_a(Vertex w) const { return sorted_contains(side_a, w); }
  bool in_b(Vertex w) const { return sorted_contains(side_b, w); }

  std::vector<Vertex> separator() const { return sorted_intersection(side_a, side_b); }
  std::vector<Vertex> a_only() const { return sorted_difference(side_a, side_b); }
  std::vector<Vertex> b_only() const { return sorted_difference(side_b, side_a); }
  int order() const { return static_cast<int>(separator().size()); }
  bool proper() const { return !a_only().empty() && !b_only().empty(); }
  Separation flipped() const { return {side_b, side_a}; }

  // Full structural invariant: the sides cover V(g) and no edge joins
  // A\B with B\A.
  bool valid_for(const Graph& g) const {
    if (static_cast<int>(sorted_union(side_a, side_b).size()) != g.vertex_count())
      return false;
    for (Vertex u : a_only())
      for (Vertex w : g.neighbors(u))
        if (in_b(w) && !in_a(w)) return false;
    return true;
  }

  friend bool operator==(const Separation&, const Separation&) = default;
};

struct Cut {
  std::vector<Vertex> side_a;  // sorted
  std::vector<Vertex> side_b;  // sorted; disjoint from side_a, covers V

  bool in_a(Vertex w) const { return sorted_contains(side_a, w); }
  bool in_b(Vertex w) const { return sorted_contains(side_b, w); }

  std::vector<VertexPair> boundary(const Graph& g) const {
    std::vector<VertexPair> out;
    for (Vertex u : side_a)
      for (Vertex w : g.neighbors(u))
        if (in_b(w)) out.push_back({u, w});
    std::sort(out.begin(), out.end());
    return out;
  }
  int order(const Graph& g) const { return static_cast<int>(boundary(g).size()); }
  bool proper() const { return !side_a.empty() && !side_b.empty(); }
  Cut flipped() const { return {side_b, side_a}; }

  bool valid_for(const Graph& g) const {
    return sorted_intersection(side_a, side_b).empty() &&
           static_cast<int>(side_a.size() + side_b.size()) == g.vertex_count();
  }

  friend bool operator==(const Cut&, const Cut&) = default;
};

// A link crosses a separation when one endpoint lies strictly in A and the
// other strictly in B; for cuts, when the endpoints lie on opposite sides.
inline bool crosses(Link l, const Separation& s) {
  const bool u_left = s.in_a(l.u) && !s.in_b(l.u);
  const bool u_right = s.in_b(l.u) && !s.in_a(l.u);
  const bool v_left = s.in_a(l.v) && !s.in_b(l.v);
  const bool v_right = s.in_b(l.v) && !s.in_a(l.v);
  return (u_left && v_right) || (u_right && v_left);
}

inline bool crosses(Link l, const Cut& c) {
  return (c.in_a(l.u) && c.in_b(l.v)) || (c.in_a(l.v) && c.in_b(l.u));
}

namespace detail {

inline int in_node(Vertex v) { return 2 * v; }
inline int out_node(Vertex v) { return 2 * v + 1; }

// Node-splitting network. vertex_cap[v] is the capacity of v_in -> v_out;
// extra_nodes slots follow the split pairs (for super source/sink).
inline MaxFlow split_network(const Graph& g, const std::vector<int>& vertex_cap,
                             int extra_nodes = 0) {
  MaxFlow mf(2 * (g.vertex_count() + 1) + extra_nodes);
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    mf.add_arc(in_node(v), out_node(v), vertex_cap[static_cast<std::size_t>(v)]);
  for (VertexPair e : g.edges()) {
    mf.add_arc(out_node(e.u), in_node(e.v), kFlowInf);
    mf.add_arc(out_node(e.v), in_node(e.u), kFlowInf);
  }
  return mf;
}

// Separation induced by the minimum cut, with A = the side reachable from
// the source. v is strictly in A when v_out is reachable, in the separator
// when only v_in is, and in B otherwise.
inline Separation separation_from_source_side(const Graph& g, const std::vector<char>& reach) {
  std::vector<Vertex> a, b;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (reach[static_cast<std::size_t>(out_node(v))]) {
      a.push_back(v);
    } else if (reach[static_cast<std::size_t>(in_node(v))]) {
      a.push_back(v);
      b.push_back(v);
    } else {
      b.push_back(v);
    }
  }
  return {std::move(a), std::move(b)};
}

// Mirror image: B = the side that still reaches the sink.
inline Separation separation_from_sink_side(const Graph& g, const std::vector<char>& reach) {
  std::vector<Vertex> a, b;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (reach[static_cast<std::size_t>(in_node(v))]) {
      b.push_back(v);
    } else if (reach[static_cast<std::size_t>(out_node(v))]) {
      a.push_back(v);
      b.push_back(v);
    } else {
      a.push_back(v);
    }
  }
  return {std::move(a), std::move(b)};
}

struct PairSeparationSearch {
  int order = 0;                      // exact when < cap, otherwise "at least cap"
  std::optional<Separation> leftmost;
  std::optional<Separation> rightmost;
};

// Minimum (a,b)-separation machinery shared by the public entry points.
// Requires a != b non-adjacent. Extractors are skipped once order >= cap.
inline PairSeparationSearch min_pair_separation(const Graph& g, Vertex a, Vertex b, int cap,
                                                bool want_left, bool want_right) {
  std::vector<int> caps(static_cast<std::size_t>(g.vertex_count()) + 1, 1);
  caps[static_cast<std::size_t>(a)] = kFlowInf;
  caps[static_cast<std::size_t>(b)] = kFlowInf;
  MaxFlow mf = split_network(g, caps);
  PairSeparationSearch res;
  res.order = mf.run(out_node(a), in_node(b), cap);
  if (res.order >= cap) return res;
  if (want_left) res.leftmost = separation_from_source_side(g, mf.source_side());
  if (want_right) res.rightmost = separation_from_sink_side(g, mf.sink_side());
  return res;
}

inline void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw std::invalid_argument("vertex out of range");
}

inline bool bfs_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

inline void require_distinct_pair(const Graph& g, Vertex a, Vertex b) {
  require_vertex(g, a);
  require_vertex(g, b);
  if (a == b) throw std::invalid_argument("endpoints must be distinct");
}

}  // namespace detail

struct MinSeparations {
  Separation leftmost;
  Separation rightmost;
  int order = 0;
};

// The two extreme minimum (a,b)-separations: every minimum (a,b)-separation
// (A,B) satisfies leftmost.A <= A <= rightmost.A (and the mirrored bounds
// for B). Requires a,b distinct and non-adjacent.
inline MinSeparations leftmost_rightmost_separation(const Graph& g, Vertex a, Vertex b) {
  detail::require_distinct_pair(g, a, b);
  if (g.has_edge(a, b))
    throw std::invalid_argument("no (a,b)-separation exists for adjacent endpoints");
  detail::PairSeparationSearch res =
      detail::min_pair_separation(g, a, b, kFlowInf, true, true);
  return {std::move(*res.leftmost), std::move(*res.rightmost), res.order};
}

// Minimum (a,b)-separation order, capped: a result equal to cap means "at
// least cap". Adjacent pairs are lambda-vertex-connected for every lambda
// and report cap.
inline int pair_vertex_connectivity(const Graph& g, Vertex a, Vertex b, int cap) {
  detail::require_distinct_pair(g, a, b);
  if (cap <= 0) return cap;
  if (g.has_edge(a, b)) return cap;
  return detail::min_pair_separation(g, a, b, cap, false, false).order;
}

// No proper separation of order < lambda. Cliques and one-vertex graphs are
// lambda-vertex-connected for every lambda.
inline bool is_lambda_vertex_connected(const Graph& g, int lambda) {
  if (lambda <= 0) return true;
  // an order-0 proper separation is exactly a component split
  if (lambda == 1) return detail::bfs_connected(g);
  const int n = g.vertex_count();
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      if (!g.has_edge(a, b) && pair_vertex_connectivity(g, a, b, lambda) < lambda)
        return false;
  return true;
}

// Vertex connectivity capped at cap; cliques report cap.
inline int vertex_connectivity(const Graph& g, int cap) {
  int best = cap;
  const int n = g.vertex_count();
  for (Vertex a = 1; a <= n && best > 0; ++a)
    for (Vertex b = a + 1; b <= n && best > 0; ++b)
      if (!g.has_edge(a, b))
        best = std::min(best, pair_vertex_connectivity(g, a, b, best));
  return best;
}

namespace detail {

// Unit-capacity edge network; each undirected edge is one arc pair with
// capacity 1 on both directions. extra_nodes slots follow vertex n.
inline MaxFlow edge_network(const Graph& g, int extra_nodes = 0) {
  MaxFlow mf(g.vertex_count() + 1 + extra_nodes);
  for (VertexPair e : g.edges()) mf.add_arc(e.u, e.v, 1, 1);
  return mf;
}

inline Cut cut_from_source_side(const Graph& g, const std::vector<char>& reach) {
  std::vector<Vertex> a, b;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    (reach[static_cast<std::size_t>(v)] ? a : b).push_back(v);
  return {std::move(a), std::move(b)};
}

inline Cut cut_from_sink_side(const Graph& g, const std::vector<char>& reach) {
  std::vector<Vertex> a, b;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    (reach[static_cast<std::size_t>(v)] ? b : a).push_back(v);
  return {std::move(a), std::move(b)};
}

}  // namespace detail

struct MinCuts {
  Cut leftmost;
  Cut rightmost;
  int order = 0;
};

// The two extreme minimum (a,b)-cuts; adjacency is allowed here.
inline MinCuts leftmost_rightmost_cut(const Graph& g, Vertex a, Vertex b) {
  detail::require_distinct_pair(g, a, b);
  MaxFlow mf = detail::edge_network(g);
  int order = mf.run(a, b);
  return {detail::cut_from_source_side(g, mf.source_side()),
          detail::cut_from_sink_side(g, mf.sink_side()), order};
}

// Minimum (a,b)-cut order, capped at cap.
inline int pair_edge_connectivity(const Graph& g, Vertex a, Vertex b, int cap) {
  detail::require_distinct_pair(g, a, b);
  if (cap <= 0) return cap;
  MaxFlow mf = detail::edge_network(g);
  return mf.run(a, b, cap);
}

// No proper cut of order < lambda; n-1 capped min-cut calls from vertex 1.
inline bool is_lambda_edge_connected(const Graph& g, int lambda) {
  if (lambda <= 0) return true;
  if (lambda == 1) return detail::bfs_connected(g);
  const int n = g.vertex_count();
  for (Vertex v = 2; v <= n; ++v)
    if (pair_edge_connectivity(g, 1, v, lambda) < lambda) return false;
  return true;
}

enum class SepSearchStatus { found, at_least_cap, infeasible };

struct ConstrainedSeparation {
  SepSearchStatus status = SepSearchStatus::infeasible;
  Separation separation;  // populated only when status == found
  int order = -1;
};

// Minimum-order separation (A,B) with force_a <= A, force_b <= B, at least
// one force_a vertex strictly in A and one force_b vertex strictly in B.
// Forced vertices other than those strict witnesses may land in the
// separator. Returns:
//   found        - that minimum is < cap (separation attached),
//   at_least_cap - such separations exist but none of order < cap,
//   infeasible   - no such separation at any order (every potential strict
//                  witness pair is adjacent or the witness pools are empty).
inline ConstrainedSeparation min_constrained_separation(const Graph& g,
                                                        std::span<const Vertex> force_a,
                                                        std::span<const Vertex> force_b,
                                                        int cap) {
  if (force_a.empty() || force_b.empty())
    throw std::invalid_argument("forced sides must be nonempty");
  for (Vertex v : force_a) detail::require_vertex(g, v);
  for (Vertex v : force_b) detail::require_vertex(g, v);

  const std::vector<Vertex> xs = sorted_unique({force_a.begin(), force_a.end()});
  const std::vector<Vertex> ys = sorted_unique({force_b.begin(), force_b.end()});
  const std::vector<Vertex> x_strict = sorted_difference(xs, ys);
  const std::vector<Vertex> y_strict = sorted_difference(ys, xs);

  std::vector<std::pair<Vertex, Vertex>> witness_pairs;
  for (Vertex x : x_strict)
    for (Vertex y : y_strict)
      if (!g.has_edge(x, y)) witness_pairs.push_back({x, y});
  if (witness_pairs.empty()) return {SepSearchStatus::infeasible, {}, -1};
  if (cap <= 0) return {SepSearchStatus::at_least_cap, {}, -1};

  const int n = g.vertex_count();
  const int super_s = 2 * (n + 1);
  const int super_t = super_s + 1;

  auto satisfies_witnesses = [&](const Separation& s) {
    bool left = false, right = false;
    for (Vertex x : xs) left = left || (s.in_a(x) && !s.in_b(x));
    for (Vertex y : ys) right = right || (s.in_b(y) && !s.in_a(y));
    return left && right;
  };

  // Fast path: one flow with both sets weakly forced. Its minimum is a lower
  // bound, and whenever an extreme minimum separation already has strict
  // witnesses it is the answer.
  {
    std::vector<int> caps(static_cast<std::size_t>(n) + 1, 1);
    MaxFlow mf = detail::split_network(g, caps, 2);
    for (Vertex x : xs) mf.add_arc(super_s, detail::in_node(x), kFlowInf);
    for (Vertex y : ys) mf.add_arc(detail::out_node(y), super_t, kFlowInf);
    int value = mf.run(super_s, super_t, cap);
    if (value >= cap) return {SepSearchStatus::at_least_cap, {}, -1};
    Separation left = detail::separation_from_source_side(g, mf.source_side());
    if (satisfies_witnesses(left)) return {SepSearchStatus::found, std::move(left), value};
    Separation right = detail::separation_from_sink_side(g, mf.sink_side());
    if (satisfies_witnesses(right)) return {SepSearchStatus::found, std::move(right), value};
  }

  // General case: pin each candidate witness pair strictly to its side and
  // take the best outcome.
  ConstrainedSeparation best;
  best.status = SepSearchStatus::at_least_cap;
  int best_cap = cap;
  for (auto [x, y] : witness_pairs) {
    std::vector<int> caps(static_cast<std::size_t>(n) + 1, 1);
    caps[static_cast<std::size_t>(x)] = kFlowInf;
    caps[static_cast<std::size_t>(y)] = kFlowInf;
    MaxFlow mf = detail::split_network(g, caps, 2);
    for (Vertex w : xs) mf.add_arc(super_s, detail::in_node(w), kFlowInf);
    for (Vertex w : ys) mf.add_arc(detail::out_node(w), super_t, kFlowInf);
    int value = mf.run(super_s, super_t, best_cap);
    if (value >= best_cap) continue;
    best.status = SepSearchStatus::found;
    best.separation = detail::separation_from_source_side(g, mf.source_side());
    best.order = value;
    best_cap = value;
    if (value == 0) break;
  }
  return best;
}

// Minimum-order cut (A,B) with force_a <= A and force_b <= B, or nullopt
// when that minimum is >= cap. Cuts have no separator subtleties, so the
// forced sets simply merge into the terminals.
inline std::optional<Cut> min_constrained_cut(const Graph& g, std::span<const Vertex> force_a,
                                              std::span<const Vertex> force_b, int cap) {
  if (force_a.empty() || force_b.empty())
    throw std::invalid_argument("forced sides must be nonempty");
  for (Vertex v : force_a) detail::require_vertex(g, v);
  for (Vertex v : force_b) detail::require_vertex(g, v);
  if (!sorted_intersection(sorted_unique({force_a.begin(), force_a.end()}),
                           sorted_unique({force_b.begin(), force_b.end()}))
           .empty())
    throw std::invalid_argument("forced sides must be disjoint");
  if (cap <= 0) return std::nullopt;

  const int n = g.vertex_count();
  const int super_s = n + 1;
  const int super_t = n + 2;
  MaxFlow mf = detail::edge_network(g, 2);
  for (Vertex w : force_a) mf.add_arc(super_s, w, kFlowInf);
  for (Vertex w : force_b) mf.add_arc(w, super_t, kFlowInf);
  int value = mf.run(super_s, super_t, cap);
  if (value >= cap) return std::nullopt;
  return detail::cut_from_source_side(g, mf.source_side());
}

}  // namespace augment
