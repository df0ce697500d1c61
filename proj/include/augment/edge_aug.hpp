#pragma once

// Edge connectivity augmentation: given (G, L, lambda, k) in edge mode,
// decide whether at most k links from L make G lambda-edge-connected. The
// pipeline mirrors the vertex solver but is simpler: the leaf of a
// lambda-Gomory-Hu tree supplies a cut whose near side is internally well
// connected, and a single domination rule shrinks the crossing links to at
// most 2k before branching.

#include <cassert>
#include <optional>
#include <span>
#include <vector>

#include "augment/core.hpp"
#include "augment/flow_cut.hpp"
#include "augment/gomory_hu.hpp"
#include "augment/solver_common.hpp"
#include "augment/vertex_aug.hpp"

namespace augment {

// Candidate-set size the edge reduction is applied at.
inline int edge_candidate_size(int k) { return 2 * k + 1; }

// Domination test behind the edge reduction: a_i b_i is dominated when no
// (a_i,b_i)-cut of order < lambda keeps every sibling B-endpoint on a_i's
// side. One constrained min-cut with the siblings merged into the source.
inline bool edge_link_dominated(const Graph& g, int lambda, Vertex ai, Vertex bi,
                                std::span<const Vertex> sibling_endpoints) {
  std::vector<Vertex> force_a{ai};
  for (Vertex x : sibling_endpoints) {
    // Candidates need not form a matching: a sibling ending in b_i itself
    // makes the escape condition unsatisfiable, so the link is dominated.
    if (x == bi) return true;
    force_a.push_back(x);
  }
  force_a = sorted_unique(std::move(force_a));
  const std::vector<Vertex> force_b{bi};
  return !min_constrained_cut(g, force_a, force_b, lambda).has_value();
}

// Edge reduction: candidate links each cross a cut (A,B) of order < lambda
// whose A side is pairwise lambda-edge-connected and there are more than 2k
// of them. Keeps the lexicographically smallest 2k+1, reports the first
// dominated one as irrelevant, or concludes no-instance.
inline ReductionOutcome edge_irrelevant(const Instance& inst, const Cut& cut,
                                        std::span<const Link> candidate) {
  if (inst.mode != Mode::edge) throw std::invalid_argument("edge-mode reduction");
  const Graph& g = inst.graph;
  if (!cut.valid_for(g) || !cut.proper() || cut.order(g) >= inst.lambda)
    throw std::invalid_argument("cut must be proper of order < lambda");
  for (std::size_t i = 0; i < cut.side_a.size(); ++i)
    for (std::size_t j = i + 1; j < cut.side_a.size(); ++j)
      if (pair_edge_connectivity(g, cut.side_a[i], cut.side_a[j], inst.lambda) < inst.lambda)
        throw std::invalid_argument("A side must be pairwise lambda-edge-connected");
  const int need = edge_candidate_size(inst.budget_k);
  if (static_cast<int>(candidate.size()) < need)
    throw std::invalid_argument("candidate set needs more than 2k links");

  std::vector<Link> links(candidate.begin(), candidate.end());
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());
  if (static_cast<int>(links.size()) < need)
    throw std::invalid_argument("candidate set needs more than 2k links");
  for (const Link& l : links) {
    if (!inst.has_link(l)) throw std::invalid_argument("candidate link not in instance");
    if (!crosses(l, cut)) throw std::invalid_argument("candidate link does not cross");
  }
  links.resize(static_cast<std::size_t>(need));

  std::vector<Vertex> near_ends(links.size()), far_ends(links.size());
  for (std::size_t i = 0; i < links.size(); ++i) {
    near_ends[i] = cut.in_a(links[i].u) ? links[i].u : links[i].v;
    far_ends[i] = links[i].other(near_ends[i]);
  }

  for (std::size_t i = 0; i < links.size(); ++i) {
    std::vector<Vertex> siblings;
    siblings.reserve(far_ends.size() - 1);
    for (std::size_t j = 0; j < far_ends.size(); ++j)
      if (j != i) siblings.push_back(far_ends[j]);
    if (edge_link_dominated(g, inst.lambda, near_ends[i], far_ends[i], siblings))
      return ReductionOutcome::irrelevant(links[i]);
  }
  return ReductionOutcome::no_instance();
}

namespace detail {

inline std::optional<Solution> solve_edge_rec(const Instance& inst, BranchBudget& budget,
                                              bool parallel_root) {
  budget.tick();
  if (inst.budget_k == 0) {
    if (is_lambda_edge_connected(inst.graph, inst.lambda)) return Solution{};
    return std::nullopt;
  }
  std::optional<Cut> cut = leaf_cut(inst.graph, inst.lambda);
  if (!cut) return Solution{};

  std::vector<Link> crossing;
  for (const Link& l : inst.links)
    if (crosses(l, *cut)) crossing.push_back(l);
  if (crossing.empty()) return std::nullopt;  // the cut must be crossed

  while (static_cast<int>(crossing.size()) > 2 * inst.budget_k) {
    ReductionOutcome out = edge_irrelevant(inst, *cut, crossing);
    if (out.kind == ReductionOutcome::Kind::no_instance) return std::nullopt;
    assert(out.kind == ReductionOutcome::Kind::irrelevant);
    crossing.erase(std::find(crossing.begin(), crossing.end(), out.link));
  }

  return branch_over(inst, crossing, parallel_root, [&budget](const Instance& child) {
    return solve_edge_rec(child, budget, false);
  });
}

}  // namespace detail

inline std::optional<Solution> solve_edge(const Instance& inst, const SolveOptions& options,
                                          SolveStats* stats = nullptr) {
  if (inst.mode != Mode::edge) throw std::invalid_argument("edge-mode instance required");
  const std::uint64_t flows_before = flow_call_counter().load(std::memory_order_relaxed);
  detail::BranchBudget budget;
  budget.limit = options.max_branch_nodes;
  auto result = detail::solve_edge_rec(inst, budget, options.parallel);
  if (stats) {
    stats->branch_nodes = budget.visited.load(std::memory_order_relaxed);
    stats->flow_calls = flow_call_counter().load(std::memory_order_relaxed) - flows_before;
  }
  return result;
}

inline std::optional<Solution> solve_edge(const Instance& inst) {
  return solve_edge(inst, SolveOptions{});
}

// Mode dispatch.
inline std::optional<Solution> solve(const Instance& inst, const SolveOptions& options = {},
                                     SolveStats* stats = nullptr) {
  return inst.mode == Mode::vertex ? solve_vertex(inst, options, stats)
                                   : solve_edge(inst, options, stats);
}

}  // namespace augment
