#pragma once

// Shared branching-solver plumbing: run statistics, options, and the abort
// guard for the (worst-case exponential in k) recursion.

#include <atomic>
#include <cstdint>
#include <stdexcept>

#include "augment/maxflow.hpp"

namespace augment {

struct SolveStats {
  std::uint64_t branch_nodes = 0;
  std::uint64_t flow_calls = 0;
};

struct SolveOptions {
  // Explore the top-level branch children concurrently. The yes/no decision
  // and the returned solution are the same as in sequential mode; only the
  // schedule differs.
  bool parallel = false;
  // Abort (by throwing BranchLimitError) after visiting this many recursion
  // nodes; 0 means unlimited.
  std::uint64_t max_branch_nodes = 0;
};

class BranchLimitError : public std::runtime_error {
 public:
  BranchLimitError() : std::runtime_error("branch node limit exceeded") {}
};

namespace detail {

struct BranchBudget {
  std::atomic<std::uint64_t> visited{0};
  std::uint64_t limit = 0;

  void tick() {
    const std::uint64_t now = visited.fetch_add(1, std::memory_order_relaxed) + 1;
    if (limit != 0 && now > limit) throw BranchLimitError();
  }
};

}  // namespace detail

}  // namespace augment
