#pragma once

// Lambda-bounded Gomory-Hu trees. The tree is a triple (T, gamma, alpha):
// gamma maps graph vertices to tree nodes and alpha maps each tree edge to
// an edge set of the graph such that
//   1. for u,v mapped to opposite sides of a tree edge e, alpha(e) is a
//      (u,v)-cutset of size < lambda, and
//   2. for u,v that are not lambda-edge-connected, some tree edge on the
//      gamma(u)-gamma(v) path carries a minimum-size (u,v)-cutset.
//
// Construction is the classical contraction-based recursion: pick two
// vertices inside a node, contract every neighboring subtree, compute a
// minimum cut. Pairs whose minimum cut reaches lambda are merged instead of
// split, so each final node's vertex class is pairwise lambda-edge-connected.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "augment/core.hpp"
#include "augment/flow_cut.hpp"
#include "augment/maxflow.hpp"

namespace augment {

struct GomoryHuTree {
  struct TreeEdge {
    int node_u = -1;
    int node_v = -1;
    std::vector<VertexPair> cutset;  // alpha(e), sorted
  };

  int node_count = 0;
  std::vector<int> node_of;                          // gamma; index 1..n
  std::vector<std::vector<Vertex>> vertex_classes;   // node -> sorted vertices
  std::vector<TreeEdge> edges;
  std::vector<std::vector<int>> adjacency;           // node -> edge ids

  int node_degree(int node) const { return static_cast<int>(adjacency[static_cast<std::size_t>(node)].size()); }

  // Edge ids on the unique tree path between two nodes.
  std::vector<int> path_edges(int from, int to) const {
    std::vector<int> parent_edge(static_cast<std::size_t>(node_count), -1);
    std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
    std::vector<int> stack{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (u == to) break;
      for (int id : adjacency[static_cast<std::size_t>(u)]) {
        const TreeEdge& e = edges[static_cast<std::size_t>(id)];
        int w = e.node_u == u ? e.node_v : e.node_u;
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          parent_edge[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::vector<int> path;
    for (int u = to; u != from;) {
      int id = parent_edge[static_cast<std::size_t>(u)];
      path.push_back(id);
      const TreeEdge& e = edges[static_cast<std::size_t>(id)];
      u = e.node_u == u ? e.node_v : e.node_u;
    }
    return path;
  }
};

namespace detail {

struct VertexDsu {
  std::vector<int> parent;
  explicit VertexDsu(int n) : parent(static_cast<std::size_t>(n) + 1) {
    for (int i = 0; i <= n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace detail

inline GomoryHuTree build_lambda_gomory_hu(const Graph& g, int lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be at least 1");
  const int n = g.vertex_count();

  std::vector<std::vector<Vertex>> node_verts{g.vertices()};
  std::vector<int> vnode(static_cast<std::size_t>(n) + 1, 0);  // vertex -> work node
  struct WorkEdge {
    int a_node, b_node;
    std::vector<VertexPair> cutset;
  };
  std::vector<WorkEdge> tree_edges;
  std::vector<std::vector<int>> node_adj{{}};
  detail::VertexDsu merged(n);

  // First two vertices of the node belonging to different merged groups.
  auto pick_pair = [&](int node) -> std::optional<std::pair<Vertex, Vertex>> {
    const auto& verts = node_verts[static_cast<std::size_t>(node)];
    if (verts.size() < 2) return std::nullopt;
    const int root = merged.find(verts.front());
    for (std::size_t i = 1; i < verts.size(); ++i)
      if (merged.find(verts[i]) != root) return std::make_pair(verts.front(), verts[i]);
    return std::nullopt;
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (int node = 0; node < static_cast<int>(node_verts.size()); ++node) {
      auto pr = pick_pair(node);
      if (!pr) continue;
      progress = true;
      const auto [a, b] = *pr;

      // Group the rest of the tree into branches hanging off this node.
      const int total_nodes = static_cast<int>(node_verts.size());
      std::vector<int> branch_of(static_cast<std::size_t>(total_nodes), -1);
      int branch_count = 0;
      for (int start_edge : node_adj[static_cast<std::size_t>(node)]) {
        const WorkEdge& we = tree_edges[static_cast<std::size_t>(start_edge)];
        int entry = we.a_node == node ? we.b_node : we.a_node;
        if (branch_of[static_cast<std::size_t>(entry)] != -1) continue;
        const int branch = branch_count++;
        std::vector<int> stack{entry};
        branch_of[static_cast<std::size_t>(entry)] = branch;
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          for (int id : node_adj[static_cast<std::size_t>(u)]) {
            const WorkEdge& e = tree_edges[static_cast<std::size_t>(id)];
            int w = e.a_node == u ? e.b_node : e.a_node;
            if (w == node || branch_of[static_cast<std::size_t>(w)] != -1) continue;
            branch_of[static_cast<std::size_t>(w)] = branch;
            stack.push_back(w);
          }
        }
      }

      // Contracted flow graph: node-local vertices keep their identity,
      // each branch collapses to one super vertex.
      const auto& verts = node_verts[static_cast<std::size_t>(node)];
      std::vector<int> flow_id(static_cast<std::size_t>(n) + 1, -1);
      for (std::size_t i = 0; i < verts.size(); ++i)
        flow_id[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
      const int local = static_cast<int>(verts.size());
      auto flow_id_of = [&](Vertex v) {
        int direct = flow_id[static_cast<std::size_t>(v)];
        if (direct != -1) return direct;
        return local + branch_of[static_cast<std::size_t>(vnode[static_cast<std::size_t>(v)])];
      };

      std::map<std::pair<int, int>, int> caps;
      for (VertexPair e : g.edges()) {
        int fu = flow_id_of(e.u), fv = flow_id_of(e.v);
        if (fu == fv) continue;
        if (fu > fv) std::swap(fu, fv);
        caps[{fu, fv}] += 1;
      }
      MaxFlow mf(local + branch_count);
      for (const auto& [key, c] : caps) mf.add_arc(key.first, key.second, c, c);

      const int value = mf.run(flow_id_of(a), flow_id_of(b), lambda);
      if (value >= lambda) {
        merged.unite(a, b);
        continue;
      }

      const std::vector<char> reach = mf.source_side();
      auto on_a_side = [&](Vertex v) {
        return reach[static_cast<std::size_t>(flow_id_of(v))] != 0;
      };

      // Split the node along the cut. Merged groups cannot straddle a cut
      // of order < lambda, so they stay intact.
      std::vector<Vertex> sa, sb;
      for (Vertex v : verts) (on_a_side(v) ? sa : sb).push_back(v);
      assert(!sa.empty() && !sb.empty());

      std::vector<VertexPair> cutset;
      for (VertexPair e : g.edges())
        if (on_a_side(e.u) != on_a_side(e.v)) cutset.push_back(e);
      assert(static_cast<int>(cutset.size()) == value);

      const int new_node = static_cast<int>(node_verts.size());
      node_verts[static_cast<std::size_t>(node)] = sa;
      node_verts.push_back(sb);
      node_adj.emplace_back();
      for (Vertex v : sb) vnode[static_cast<std::size_t>(v)] = new_node;

      // Subtrees on the far side of the cut move to the new node.
      std::vector<int> old_edges = node_adj[static_cast<std::size_t>(node)];
      for (int id : old_edges) {
        WorkEdge& we = tree_edges[static_cast<std::size_t>(id)];
        const int other = we.a_node == node ? we.b_node : we.a_node;
        const int branch = branch_of[static_cast<std::size_t>(other)];
        const bool branch_on_a = reach[static_cast<std::size_t>(local + branch)] != 0;
        if (branch_on_a) continue;
        if (we.a_node == node)
          we.a_node = new_node;
        else
          we.b_node = new_node;
        auto& adj = node_adj[static_cast<std::size_t>(node)];
        adj.erase(std::find(adj.begin(), adj.end(), id));
        node_adj[static_cast<std::size_t>(new_node)].push_back(id);
      }

      tree_edges.push_back({node, new_node, std::move(cutset)});
      node_adj[static_cast<std::size_t>(node)].push_back(static_cast<int>(tree_edges.size()) - 1);
      node_adj[static_cast<std::size_t>(new_node)].push_back(static_cast<int>(tree_edges.size()) - 1);
    }
  }

  GomoryHuTree t;
  t.node_count = static_cast<int>(node_verts.size());
  t.vertex_classes = std::move(node_verts);
  t.node_of.assign(static_cast<std::size_t>(n) + 1, -1);
  for (int node = 0; node < t.node_count; ++node)
    for (Vertex v : t.vertex_classes[static_cast<std::size_t>(node)])
      t.node_of[static_cast<std::size_t>(v)] = node;
  t.edges.reserve(tree_edges.size());
  t.adjacency.assign(static_cast<std::size_t>(t.node_count), {});
  for (const WorkEdge& we : tree_edges) {
    t.edges.push_back({we.a_node, we.b_node, we.cutset});
    int id = static_cast<int>(t.edges.size()) - 1;
    t.adjacency[static_cast<std::size_t>(we.a_node)].push_back(id);
    t.adjacency[static_cast<std::size_t>(we.b_node)].push_back(id);
  }
  return t;
}

// A proper cut (A,B) of order < lambda whose A side is pairwise
// lambda-edge-connected, taken from a leaf of the lambda-Gomory-Hu tree;
// nullopt exactly when g is lambda-edge-connected. Among the leaves the one
// whose class contains the smallest vertex id is chosen.
inline std::optional<Cut> leaf_cut(const Graph& g, int lambda) {
  GomoryHuTree t = build_lambda_gomory_hu(g, lambda);
  if (t.node_count == 1) return std::nullopt;

  int best_leaf = -1;
  Vertex best_key = g.vertex_count() + 1;
  for (int node = 0; node < t.node_count; ++node) {
    if (t.node_degree(node) != 1) continue;
    assert(!t.vertex_classes[static_cast<std::size_t>(node)].empty());
    Vertex key = t.vertex_classes[static_cast<std::size_t>(node)].front();
    if (key < best_key) {
      best_key = key;
      best_leaf = node;
    }
  }
  assert(best_leaf >= 0);

  std::vector<Vertex> side_a = t.vertex_classes[static_cast<std::size_t>(best_leaf)];
  std::vector<Vertex> side_b = sorted_difference(g.vertices(), side_a);
  return Cut{std::move(side_a), std::move(side_b)};
}

}  // namespace augment
