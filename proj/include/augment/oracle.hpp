#pragma once

// Ground-truth machinery: exhaustive enumerators, a subset-enumeration brute
// force, and a reproducible random instance generator. Everything here is
// deliberately independent of the solvers it is used to check.

#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "augment/core.hpp"
#include "augment/flow_cut.hpp"

namespace augment {

// SplitMix64: fixed mixing constants, identical output on every platform.
// Recorded as "splitmix64" in generated corpora so they can be replayed.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1), 53 significant bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound), unbiased via rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }
};

inline constexpr const char* kGeneratorName = "splitmix64";

struct GeneratorParams {
  int n = 1;
  double edge_probability = 0.0;
  int link_count = 0;
  int lambda = 1;
  int budget_k = 0;
  Mode mode = Mode::edge;
  std::uint64_t seed = 0;
};

// Erdos-Renyi edges at edge_probability, then link_count links sampled
// uniformly without replacement from the non-edges. Deterministic function
// of the parameters: same seed, same instance, bit for bit.
inline Instance generate(const GeneratorParams& p) {
  if (p.n < 1) throw std::invalid_argument("n must be at least 1");
  if (p.edge_probability < 0.0 || p.edge_probability > 1.0)
    throw std::invalid_argument("edge probability must be in [0,1]");
  if (p.link_count < 0) throw std::invalid_argument("link count must be nonnegative");
  if (p.lambda < 1) throw std::invalid_argument("lambda must be at least 1");
  if (p.budget_k < 0) throw std::invalid_argument("k must be nonnegative");

  SplitMix64 rng(p.seed);
  Instance inst;
  inst.graph = Graph(p.n);
  inst.lambda = p.lambda;
  inst.budget_k = p.budget_k;
  inst.mode = p.mode;

  std::vector<VertexPair> non_edges;
  for (Vertex u = 1; u <= p.n; ++u)
    for (Vertex v = u + 1; v <= p.n; ++v) {
      if (rng.next_unit() < p.edge_probability)
        inst.graph.add_edge(u, v);
      else
        non_edges.push_back({u, v});
    }

  if (static_cast<int>(non_edges.size()) < p.link_count)
    throw std::invalid_argument("fewer non-edges than requested links");

  // Partial Fisher-Yates over the lexicographically ordered non-edges.
  for (int i = 0; i < p.link_count; ++i) {
    std::size_t j = static_cast<std::size_t>(i) +
                    rng.next_below(non_edges.size() - static_cast<std::size_t>(i));
    std::swap(non_edges[static_cast<std::size_t>(i)], non_edges[j]);
  }
  inst.links.assign(non_edges.begin(), non_edges.begin() + p.link_count);
  std::sort(inst.links.begin(), inst.links.end());
  return inst;
}

namespace detail {

// Number of link subsets brute_solve would examine, saturating.
inline std::uint64_t brute_subset_count(std::size_t links, int k) {
  const std::uint64_t kSaturate = UINT64_MAX / 2;
  std::uint64_t total = 0, per_size = 1;
  const int top = std::min<int>(k, static_cast<int>(links));
  for (int i = 0; i <= top; ++i) {
    total += per_size;
    if (total > kSaturate) return kSaturate;
    if (i < top) {
      if (per_size > kSaturate / (links - static_cast<std::size_t>(i))) return kSaturate;
      per_size = per_size * (links - static_cast<std::size_t>(i)) /
                 (static_cast<std::uint64_t>(i) + 1);
    }
  }
  return total;
}

}  // namespace detail

inline constexpr std::uint64_t kBruteWorkLimit = 1u << 20;

// Exhaustive decision oracle: tries link subsets of size 0..k in increasing
// size and, within a size, in lexicographic order over the sorted link list,
// returning the first subset whose addition makes the graph
// lambda-connected in the instance's mode. Guarded by a subset-count budget.
inline std::optional<Solution> brute_solve(const Instance& inst) {
  if (detail::brute_subset_count(inst.links.size(), inst.budget_k) > kBruteWorkLimit)
    throw std::invalid_argument("brute_solve work guard exceeded");

  auto connected = [&](const Graph& g) {
    return inst.mode == Mode::vertex ? is_lambda_vertex_connected(g, inst.lambda)
                                     : is_lambda_edge_connected(g, inst.lambda);
  };

  if (connected(inst.graph)) return Solution{};

  const int m = static_cast<int>(inst.links.size());
  const int max_size = std::min(inst.budget_k, m);
  std::vector<int> idx;
  for (int size = 1; size <= max_size; ++size) {
    idx.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      Solution subset;
      subset.reserve(static_cast<std::size_t>(size));
      for (int i : idx) subset.push_back(inst.links[static_cast<std::size_t>(i)]);
      if (connected(add_links(inst.graph, subset))) return subset;

      // next combination in lexicographic order
      int pos = size - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - size + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i)
        idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return std::nullopt;
}

namespace detail {

// Connected components of g with the vertices in `removed` deleted;
// comp[v] == -1 marks removed vertices.
inline std::vector<int> components_without(const Graph& g, const std::vector<char>& removed,
                                           int& count) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n) + 1, -1);
  count = 0;
  for (Vertex start = 1; start <= n; ++start) {
    if (removed[static_cast<std::size_t>(start)] || comp[static_cast<std::size_t>(start)] != -1)
      continue;
    std::queue<Vertex> q;
    comp[static_cast<std::size_t>(start)] = count;
    q.push(start);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (removed[static_cast<std::size_t>(w)] || comp[static_cast<std::size_t>(w)] != -1)
          continue;
        comp[static_cast<std::size_t>(w)] = count;
        q.push(w);
      }
    }
    ++count;
  }
  return comp;
}

}  // namespace detail

// Every minimum-order (a,b)-separation, found by trying all vertex subsets
// as candidate separators and assigning the leftover components to either
// side. Test oracle; guarded to n <= 12.
inline std::vector<Separation> enumerate_min_separations(const Graph& g, Vertex a, Vertex b) {
  const int n = g.vertex_count();
  if (n > 12) throw std::invalid_argument("enumerate_min_separations guard: n > 12");
  detail::require_distinct_pair(g, a, b);
  if (g.has_edge(a, b))
    throw std::invalid_argument("no (a,b)-separation exists for adjacent endpoints");

  std::vector<Vertex> others;
  for (Vertex v = 1; v <= n; ++v)
    if (v != a && v != b) others.push_back(v);
  const int o = static_cast<int>(others.size());

  int best = n + 1;
  std::vector<std::uint32_t> separating_masks;
  for (std::uint32_t mask = 0; mask < (1u << o); ++mask) {
    const int size = std::popcount(mask);
    if (size > best) continue;
    std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < o; ++i)
      if (mask & (1u << i)) removed[static_cast<std::size_t>(others[static_cast<std::size_t>(i)])] = 1;
    int count = 0;
    std::vector<int> comp = detail::components_without(g, removed, count);
    if (comp[static_cast<std::size_t>(a)] == comp[static_cast<std::size_t>(b)]) continue;
    if (size < best) {
      best = size;
      separating_masks.clear();
    }
    separating_masks.push_back(mask);
  }

  std::vector<Separation> out;
  for (std::uint32_t mask : separating_masks) {
    std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> separator;
    for (int i = 0; i < o; ++i)
      if (mask & (1u << i)) {
        Vertex v = others[static_cast<std::size_t>(i)];
        removed[static_cast<std::size_t>(v)] = 1;
        separator.push_back(v);
      }
    int count = 0;
    std::vector<int> comp = detail::components_without(g, removed, count);
    const int a_comp = comp[static_cast<std::size_t>(a)];
    const int b_comp = comp[static_cast<std::size_t>(b)];

    std::vector<int> free_comps;
    for (int c = 0; c < count; ++c)
      if (c != a_comp && c != b_comp) free_comps.push_back(c);

    for (std::uint32_t assign = 0; assign < (1u << free_comps.size()); ++assign) {
      std::vector<int> side_of(static_cast<std::size_t>(count), 1);  // 0 = A, 1 = B
      side_of[static_cast<std::size_t>(a_comp)] = 0;
      for (std::size_t i = 0; i < free_comps.size(); ++i)
        if (assign & (1u << i)) side_of[static_cast<std::size_t>(free_comps[i])] = 0;
      std::vector<Vertex> side_a = separator, side_b = separator;
      for (Vertex v = 1; v <= n; ++v) {
        if (removed[static_cast<std::size_t>(v)]) continue;
        if (side_of[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] == 0)
          side_a.push_back(v);
        else
          side_b.push_back(v);
      }
      std::sort(side_a.begin(), side_a.end());
      std::sort(side_b.begin(), side_b.end());
      out.push_back({std::move(side_a), std::move(side_b)});
    }
  }
  return out;
}

// All proper cuts of order <= max_order, one orientation each (vertex 1 is
// always on side_a). Test oracle; guarded to n <= 14.
inline std::vector<Cut> enumerate_cuts(const Graph& g, int max_order) {
  const int n = g.vertex_count();
  if (n > 14) throw std::invalid_argument("enumerate_cuts guard: n > 14");
  std::vector<Cut> out;
  if (n < 2) return out;
  for (std::uint32_t mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
    // vertex 1 plus the mask over vertices 2..n forms side_a
    std::vector<char> in_a(static_cast<std::size_t>(n) + 1, 0);
    in_a[1] = 1;
    for (int i = 0; i < n - 1; ++i)
      if (mask & (1u << i)) in_a[static_cast<std::size_t>(i + 2)] = 1;
    int order = 0;
    for (VertexPair e : g.edges())
      if (in_a[static_cast<std::size_t>(e.u)] != in_a[static_cast<std::size_t>(e.v)]) ++order;
    if (order > max_order) continue;
    std::vector<Vertex> side_a, side_b;
    for (Vertex v = 1; v <= n; ++v)
      (in_a[static_cast<std::size_t>(v)] ? side_a : side_b).push_back(v);
    out.push_back({std::move(side_a), std::move(side_b)});
  }
  return out;
}

}  // namespace augment
