#pragma once

// Vertex connectivity augmentation: given (G, L, lambda, k) in vertex mode,
// decide whether at most k links from L make G lambda-vertex-connected, and
// produce such a set when one exists.
//
// The solver branches on a small "relevant" subset of L. Relevance is
// established by repeatedly discarding links that are dominated: every small
// separation splitting a dominated link's endpoints also strands enough
// sibling endpoints that some sibling can replace it in any solution. Two
// domination arguments are used, one for stars of links sharing a vertex and
// one for link matchings across a separation whose far side is already
// well connected internally.

#include <cassert>
#include <future>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "augment/core.hpp"
#include "augment/flow_cut.hpp"
#include "augment/solver_common.hpp"

namespace augment {

// Star domination threshold: a vertex with this many incident candidate
// links admits a reduction.
inline int star_candidate_size(int lambda, int k) { return 20 * lambda * k; }
// Matching domination threshold.
inline int matching_candidate_size(int lambda, int k) { return 40 * lambda * k; }
// Once the crossing link set is below this, branching takes over.
inline int relevant_set_bound(int lambda, int k) { return 1600 * lambda * lambda * k * k; }

struct ReductionOutcome {
  enum class Kind { irrelevant, no_instance, already_connected, relevant_set };

  Kind kind = Kind::no_instance;
  Link link{1, 2};              // meaningful iff kind == irrelevant
  std::vector<Link> relevant;   // meaningful iff kind == relevant_set

  static ReductionOutcome irrelevant(Link l) { return {Kind::irrelevant, l, {}}; }
  static ReductionOutcome no_instance() { return {Kind::no_instance, {1, 2}, {}}; }
  static ReductionOutcome already_connected() {
    return {Kind::already_connected, {1, 2}, {}};
  }
  static ReductionOutcome relevant_set(std::vector<Link> links) {
    return {Kind::relevant_set, {1, 2}, std::move(links)};
  }
};

namespace detail {

// Shared machinery for the recursive special-separation search. Pairwise
// lambda-connectivity is always evaluated against the original graph; the
// recursion only adds edges to control which (a,b)-separations remain.
class SpecialSeparationFinder {
 public:
  SpecialSeparationFinder(const Graph& g, int lambda)
      : g_(g), lambda_(lambda),
        pair_cache_(static_cast<std::size_t>(g.vertex_count()) + 1,
                    std::vector<signed char>(static_cast<std::size_t>(g.vertex_count()) + 1, -1)) {}

  // An (a,b)-separation of order < lambda whose A\B is pairwise
  // lambda-vertex-connected in the original graph, if one exists.
  std::optional<Separation> find_for_pair(Vertex a, Vertex b) {
    return recurse(g_, a, b);
  }

  bool pair_lambda_connected(Vertex u, Vertex v) {
    signed char& memo = pair_cache_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    if (memo < 0) {
      memo = pair_vertex_connectivity(g_, u, v, lambda_) >= lambda_ ? 1 : 0;
      pair_cache_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = memo;
    }
    return memo == 1;
  }

 private:
  std::optional<Separation> recurse(const Graph& cur, Vertex a, Vertex b) {
    if (cur.has_edge(a, b)) return std::nullopt;  // a branch pinned a itself to B
    PairSeparationSearch search = min_pair_separation(cur, a, b, lambda_, true, false);
    if (search.order >= lambda_) return std::nullopt;
    const Separation& left = *search.leftmost;

    // Lexicographically first pair of the left difference that the original
    // graph does not connect well enough.
    const std::vector<Vertex> a_only = left.a_only();
    for (std::size_t i = 0; i < a_only.size(); ++i) {
      for (std::size_t j = i + 1; j < a_only.size(); ++j) {
        const Vertex u = a_only[i], v = a_only[j];
        if (pair_lambda_connected(u, v)) continue;
        // Any admissible separation must move u or v out of A\B; pinning a
        // witness next to b raises the (a,b)-connectivity by one, so the
        // recursion depth is bounded.
        for (Vertex w : {u, v}) {
          Graph next = cur;
          next.add_edge(w, b);
          if (auto found = recurse(next, a, b)) return found;
        }
        return std::nullopt;
      }
    }
    return left;
  }

  const Graph& g_;
  int lambda_;
  std::vector<std::vector<signed char>> pair_cache_;
};

inline bool pairwise_lambda_vertex_connected(const Graph& g, std::span<const Vertex> verts,
                                             int lambda) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (pair_vertex_connectivity(g, verts[i], verts[j], lambda) < lambda) return false;
  return true;
}

}  // namespace detail

// An (a,b)-separation of order < lambda whose A\B vertices are pairwise
// lambda-vertex-connected in g, or nullopt when no such separation exists.
// Recursive search by witness pinning, at most 2^k leaves. Requires a,b
// distinct, non-adjacent, and (lambda-k)-vertex-connected; k >= 1.
inline std::optional<Separation> special_separation_for_pair(const Graph& g, Vertex a, Vertex b,
                                                             int lambda, int k) {
  detail::require_distinct_pair(g, a, b);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (g.has_edge(a, b)) throw std::invalid_argument("endpoints must be non-adjacent");
  if (lambda - k > 0 && pair_vertex_connectivity(g, a, b, lambda - k) < lambda - k)
    throw std::invalid_argument("endpoints must be (lambda-k)-vertex-connected");
  detail::SpecialSeparationFinder finder(g, lambda);
  return finder.find_for_pair(a, b);
}

// A proper separation of order < lambda whose A\B is pairwise
// lambda-vertex-connected, found by trying all non-adjacent pairs. Requires
// g not lambda-vertex-connected but (lambda-k)-vertex-connected, k >= 1;
// under those preconditions such a separation always exists.
inline Separation special_separation(const Graph& g, int lambda, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (is_lambda_vertex_connected(g, lambda))
    throw std::invalid_argument("graph already lambda-vertex-connected");
  if (!is_lambda_vertex_connected(g, lambda - k))
    throw std::invalid_argument("graph must be (lambda-k)-vertex-connected");

  detail::SpecialSeparationFinder finder(g, lambda);
  const int n = g.vertex_count();
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) {
      if (g.has_edge(a, b)) continue;
      if (auto found = finder.find_for_pair(a, b)) {
        assert(found->proper() && found->order() < lambda);
        assert(detail::pairwise_lambda_vertex_connected(g, found->a_only(), lambda));
        return *found;
      }
    }
  throw std::logic_error("no special separation found despite preconditions");
}

// Domination test behind the star reduction: the link v-xi is dominated
// when no separation of order < lambda keeps N[v] and the sibling endpoints
// on one side and N[xi] on the other.
inline bool star_link_dominated(const Graph& g, int lambda, Vertex v, Vertex xi,
                                std::span<const Vertex> sibling_endpoints) {
  std::vector<Vertex> force_a = g.closed_neighborhood(v);
  for (Vertex x : sibling_endpoints)
    if (x != xi) force_a.push_back(x);
  force_a = sorted_unique(std::move(force_a));
  const std::vector<Vertex> force_b = g.closed_neighborhood(xi);
  ConstrainedSeparation r = min_constrained_separation(g, force_a, force_b, lambda);
  return r.status != SepSearchStatus::found;
}

// Star reduction: candidate links all share the vertex v and there are at
// least 20*lambda*k of them. Keeps the lexicographically smallest
// 20*lambda*k candidates, reports the first dominated one as irrelevant, or
// concludes no-instance when none is dominated.
inline ReductionOutcome star_irrelevant(const Instance& inst, std::span<const Link> candidate,
                                        Vertex v) {
  if (inst.mode != Mode::vertex) throw std::invalid_argument("vertex-mode reduction");
  detail::require_vertex(inst.graph, v);
  const int need = star_candidate_size(inst.lambda, inst.budget_k);
  if (static_cast<int>(candidate.size()) < need)
    throw std::invalid_argument("candidate set smaller than 20*lambda*k");
  std::vector<Link> links(candidate.begin(), candidate.end());
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  if (static_cast<int>(links.size()) < need)
    throw std::invalid_argument("candidate set smaller than 20*lambda*k");
  for (const Link& l : links) {
    if (!l.touches(v)) throw std::invalid_argument("candidate link not incident to v");
    if (!inst.has_link(l)) throw std::invalid_argument("candidate link not in instance");
  }
  links.resize(static_cast<std::size_t>(need));

  std::vector<Vertex> endpoints;
  endpoints.reserve(links.size());
  for (const Link& l : links) endpoints.push_back(l.other(v));

  for (std::size_t i = 0; i < links.size(); ++i) {
    std::vector<Vertex> siblings;
    siblings.reserve(endpoints.size() - 1);
    for (std::size_t j = 0; j < endpoints.size(); ++j)
      if (j != i) siblings.push_back(endpoints[j]);
    if (star_link_dominated(inst.graph, inst.lambda, v, endpoints[i], siblings))
      return ReductionOutcome::irrelevant(links[i]);
  }
  return ReductionOutcome::no_instance();
}

// Is there an (a,b)-separation of order < lambda with at most s terminals
// strictly inside B? Recursion on the rightmost minimum separation: either
// it already satisfies the bound, or (below order lambda-1) some terminal of
// its far side must be pulled into A, which pins an edge a-t and raises the
// (a,b)-connectivity. (|T|+1)^k leaves. Requires a,b non-adjacent and
// (lambda-k)-vertex-connected, terminals within V \ {a,b}, k >= 0.
inline bool bounded_terminal_separation(const Graph& g, Vertex a, Vertex b, int lambda, int k,
                                        std::span<const Vertex> terminals, int s) {
  detail::require_distinct_pair(g, a, b);
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (g.has_edge(a, b))
    throw std::invalid_argument("no (a,b)-separation exists for adjacent endpoints");
  if (lambda - k > 0 && pair_vertex_connectivity(g, a, b, lambda - k) < lambda - k)
    throw std::invalid_argument("endpoints must be (lambda-k)-vertex-connected");
  const std::vector<Vertex> terms = sorted_unique({terminals.begin(), terminals.end()});
  for (Vertex t : terms) {
    detail::require_vertex(g, t);
    if (t == a || t == b) throw std::invalid_argument("terminals must avoid the endpoints");
  }

  struct Search {
    const std::vector<Vertex>& terms;
    Vertex a, b;
    int lambda, s;

    bool run(const Graph& cur) const {
      detail::PairSeparationSearch found =
          detail::min_pair_separation(cur, a, b, lambda, false, true);
      if (found.order >= lambda) return false;
      const std::vector<Vertex> far = found.rightmost->b_only();
      std::vector<Vertex> far_terms = sorted_intersection(terms, far);
      if (static_cast<int>(far_terms.size()) <= s) return true;
      // Minimum-order candidates are all bounded by the rightmost one, so at
      // order lambda-1 the check above was decisive.
      if (found.order == lambda - 1) return false;
      for (Vertex t : far_terms) {
        Graph next = cur;
        next.add_edge(a, t);
        if (run(next)) return true;
      }
      return false;
    }
  };
  return Search{terms, a, b, lambda, s}.run(g);
}

// Matching reduction: candidate links are pairwise vertex-disjoint, each
// crossing a separation (A,B) of order < lambda whose A\B is pairwise
// lambda-vertex-connected, with at least 40*lambda*k of them; g itself must
// be (lambda-k)-vertex-connected. A link a_i b_i is dominated when every
// order-< lambda separation of its endpoints strands at least lambda sibling
// B-endpoints on the far side.
inline ReductionOutcome matching_irrelevant(const Instance& inst, const Separation& sep,
                                            std::span<const Link> candidate) {
  if (inst.mode != Mode::vertex) throw std::invalid_argument("vertex-mode reduction");
  const Graph& g = inst.graph;
  if (!sep.valid_for(g) || sep.order() >= inst.lambda)
    throw std::invalid_argument("separation must be valid of order < lambda");
  if (!detail::pairwise_lambda_vertex_connected(g, sep.a_only(), inst.lambda))
    throw std::invalid_argument("A-side difference must be pairwise lambda-vertex-connected");
  const int lk = inst.lambda - inst.budget_k;
  if (lk > 0 && !is_lambda_vertex_connected(g, lk))
    throw std::invalid_argument("graph must be (lambda-k)-vertex-connected");
  const int need = matching_candidate_size(inst.lambda, inst.budget_k);
  if (static_cast<int>(candidate.size()) < need)
    throw std::invalid_argument("candidate set smaller than 40*lambda*k");

  std::vector<Link> links(candidate.begin(), candidate.end());
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  if (static_cast<int>(links.size()) < need)
    throw std::invalid_argument("candidate set smaller than 40*lambda*k");
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (const Link& l : links) {
    if (!inst.has_link(l)) throw std::invalid_argument("candidate link not in instance");
    if (!crosses(l, sep)) throw std::invalid_argument("candidate link does not cross");
    if (used[static_cast<std::size_t>(l.u)] || used[static_cast<std::size_t>(l.v)])
      throw std::invalid_argument("candidate links must form a matching");
    used[static_cast<std::size_t>(l.u)] = used[static_cast<std::size_t>(l.v)] = 1;
  }
  links.resize(static_cast<std::size_t>(need));

  std::vector<Vertex> near_ends(links.size()), far_ends(links.size());
  for (std::size_t i = 0; i < links.size(); ++i) {
    const bool u_near = sep.in_a(links[i].u) && !sep.in_b(links[i].u);
    near_ends[i] = u_near ? links[i].u : links[i].v;
    far_ends[i] = links[i].other(near_ends[i]);
  }

  for (std::size_t i = 0; i < links.size(); ++i) {
    std::vector<Vertex> siblings;
    siblings.reserve(far_ends.size() - 1);
    for (std::size_t j = 0; j < far_ends.size(); ++j)
      if (j != i) siblings.push_back(far_ends[j]);
    const bool escapes = bounded_terminal_separation(g, near_ends[i], far_ends[i], inst.lambda,
                                                     inst.budget_k, siblings, inst.lambda - 1);
    if (!escapes) return ReductionOutcome::irrelevant(links[i]);
  }
  return ReductionOutcome::no_instance();
}

// Link-set reduction: either the graph is already connected enough, the
// instance is hopeless, or a relevant subset of at most O(lambda^2 k^2)
// links survives (every solution, if any exists, can be rerouted to use one
// of them). Requires vertex mode and k >= 1.
inline ReductionOutcome reduce_links(const Instance& inst) {
  if (inst.mode != Mode::vertex) throw std::invalid_argument("vertex-mode reduction");
  if (inst.budget_k < 1) throw std::invalid_argument("k must be at least 1");
  const Graph& g = inst.graph;
  const int lambda = inst.lambda;
  const int k = inst.budget_k;

  if (is_lambda_vertex_connected(g, lambda)) return ReductionOutcome::already_connected();
  if (lambda >= g.vertex_count() - 2) return ReductionOutcome::relevant_set(inst.links);
  // One link raises vertex connectivity by at most one below n-2, so a gap
  // larger than k is hopeless.
  if (!is_lambda_vertex_connected(g, lambda - k)) return ReductionOutcome::no_instance();

  const Separation sep = special_separation(g, lambda, k);
  std::vector<Link> crossing;
  for (const Link& l : inst.links)
    if (crosses(l, sep)) crossing.push_back(l);
  if (crossing.empty()) return ReductionOutcome::no_instance();

  const int star_need = star_candidate_size(lambda, k);
  const int target = relevant_set_bound(lambda, k);

  auto erase_link = [&](Link l) {
    crossing.erase(std::find(crossing.begin(), crossing.end(), l));
  };

  // Phase 1: shrink link stars. Removing links never raises a degree, so a
  // single pass over increasing center vertices suffices.
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    while (true) {
      std::vector<Link> incident;
      for (const Link& l : crossing)
        if (l.touches(v)) incident.push_back(l);
      if (static_cast<int>(incident.size()) < star_need) break;
      ReductionOutcome out = star_irrelevant(inst, incident, v);
      if (out.kind == ReductionOutcome::Kind::no_instance) return out;
      assert(out.kind == ReductionOutcome::Kind::irrelevant);
      erase_link(out.link);
    }
  }

  // Phase 2: shrink via matchings until the crossing set is small. With all
  // link degrees below 20*lambda*k, a greedy matching over the remaining
  // crossing links always reaches 40*lambda*k.
  while (static_cast<int>(crossing.size()) >= target) {
    std::vector<Link> matching;
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (const Link& l : crossing) {
      if (used[static_cast<std::size_t>(l.u)] || used[static_cast<std::size_t>(l.v)]) continue;
      used[static_cast<std::size_t>(l.u)] = used[static_cast<std::size_t>(l.v)] = 1;
      matching.push_back(l);
    }
    assert(static_cast<int>(matching.size()) >= matching_candidate_size(lambda, k));
    ReductionOutcome out = matching_irrelevant(inst, sep, matching);
    if (out.kind == ReductionOutcome::Kind::no_instance) return out;
    assert(out.kind == ReductionOutcome::Kind::irrelevant);
    erase_link(out.link);
  }
  return ReductionOutcome::relevant_set(std::move(crossing));
}

namespace detail {

inline Instance branch_instance(const Instance& inst, Link chosen) {
  Instance child;
  child.graph = inst.graph;
  child.graph.add_edge(chosen);
  child.links.reserve(inst.links.size() - 1);
  for (const Link& l : inst.links)
    if (l != chosen) child.links.push_back(l);
  child.lambda = inst.lambda;
  child.budget_k = inst.budget_k - 1;
  child.mode = inst.mode;
  return child;
}

// Branch over the candidate links in order, sequentially or (at the root
// only) in index-ordered batches of async tasks. Both schedules return the
// same first-index success.
template <typename Recurse>
std::optional<Solution> branch_over(const Instance& inst, const std::vector<Link>& candidates,
                                    bool parallel_root, Recurse&& recurse) {
  if (!parallel_root || candidates.size() < 2) {
    for (const Link& l : candidates) {
      if (auto sub = recurse(branch_instance(inst, l))) {
        sub->push_back(l);
        std::sort(sub->begin(), sub->end());
        return sub;
      }
    }
    return std::nullopt;
  }

  const std::size_t width = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  for (std::size_t base = 0; base < candidates.size(); base += width) {
    const std::size_t end = std::min(candidates.size(), base + width);
    std::vector<std::future<std::optional<Solution>>> futures;
    futures.reserve(end - base);
    for (std::size_t i = base; i < end; ++i)
      futures.push_back(std::async(std::launch::async, [&inst, &recurse, &candidates, i] {
        return recurse(branch_instance(inst, candidates[i]));
      }));
    for (std::size_t i = base; i < end; ++i) {
      auto sub = futures[i - base].get();
      if (sub) {
        sub->push_back(candidates[i]);
        std::sort(sub->begin(), sub->end());
        return sub;
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Solution> solve_vertex_rec(const Instance& inst, BranchBudget& budget,
                                                bool parallel_root) {
  budget.tick();
  if (inst.budget_k == 0) {
    if (is_lambda_vertex_connected(inst.graph, inst.lambda)) return Solution{};
    return std::nullopt;
  }
  ReductionOutcome red = reduce_links(inst);
  switch (red.kind) {
    case ReductionOutcome::Kind::already_connected:
      return Solution{};
    case ReductionOutcome::Kind::no_instance:
      return std::nullopt;
    case ReductionOutcome::Kind::relevant_set:
      break;
    case ReductionOutcome::Kind::irrelevant:
      assert(false && "reduce_links never exposes single-link outcomes");
      return std::nullopt;
  }
  return branch_over(inst, red.relevant, parallel_root,
                     [&budget](const Instance& child) {
                       return solve_vertex_rec(child, budget, false);
                     });
}

}  // namespace detail

inline std::optional<Solution> solve_vertex(const Instance& inst, const SolveOptions& options,
                                            SolveStats* stats = nullptr) {
  if (inst.mode != Mode::vertex) throw std::invalid_argument("vertex-mode instance required");
  const std::uint64_t flows_before = flow_call_counter().load(std::memory_order_relaxed);
  detail::BranchBudget budget;
  budget.limit = options.max_branch_nodes;
  auto result = detail::solve_vertex_rec(inst, budget, options.parallel);
  if (stats) {
    stats->branch_nodes = budget.visited.load(std::memory_order_relaxed);
    stats->flow_calls =
        flow_call_counter().load(std::memory_order_relaxed) - flows_before;
  }
  return result;
}

inline std::optional<Solution> solve_vertex(const Instance& inst) {
  return solve_vertex(inst, SolveOptions{});
}

}  // namespace augment
