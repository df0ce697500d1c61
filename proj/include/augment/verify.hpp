#pragma once

// Solution certificate checking, independent of any solver state: the graph
// with the chosen links added is re-tested for lambda-connectivity through
// the flow primitives.

#include <span>
#include <string>

#include "augment/core.hpp"
#include "augment/flow_cut.hpp"

namespace augment {

struct VerifyResult {
  bool ok = false;
  std::string reason;  // names the failing condition; empty when ok

  explicit operator bool() const { return ok; }
};

inline VerifyResult verify_solution(const Instance& inst, std::span<const Link> chosen) {
  std::vector<Link> s(chosen.begin(), chosen.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  for (const Link& l : s)
    if (!inst.has_link(l)) return {false, "link not available"};
  if (static_cast<int>(s.size()) > inst.budget_k) return {false, "budget exceeded"};

  Graph augmented = add_links(inst.graph, s);
  const bool connected = inst.mode == Mode::vertex
                             ? is_lambda_vertex_connected(augmented, inst.lambda)
                             : is_lambda_edge_connected(augmented, inst.lambda);
  if (!connected) return {false, "not lambda-connected"};
  return {true, {}};
}

}  // namespace augment
