#pragma once

// Residual-network max flow via BFS augmenting paths (Edmonds-Karp). Every
// flow in this project is either capped at a small connectivity threshold or
// runs on a graph with a handful of vertices, so shortest-path augmentation
// is entirely sufficient.

#include <atomic>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace augment {

inline constexpr int kFlowInf = std::numeric_limits<int>::max() / 4;

// Process-wide tally of max-flow invocations, reported in solver statistics.
inline std::atomic<std::uint64_t>& flow_call_counter() {
  static std::atomic<std::uint64_t> counter{0};
  return counter;
}

class MaxFlow {
 public:
  explicit MaxFlow(int node_count) : heads_(static_cast<std::size_t>(node_count)) {}

  int node_count() const { return static_cast<int>(heads_.size()); }

  // Adds the arc from->to plus its residual partner at index id^1.
  void add_arc(int from, int to, int cap, int reverse_cap = 0) {
    heads_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    heads_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, reverse_cap});
  }

  // Augments until the flow reaches flow_cap or no augmenting path remains.
  // A result >= flow_cap means "at least flow_cap"; the residual state is
  // then not a maximum flow and the side extractors must not be used.
  int run(int source, int sink, int flow_cap = kFlowInf) {
    flow_call_counter().fetch_add(1, std::memory_order_relaxed);
    source_ = source;
    sink_ = sink;
    int flow = 0;
    std::vector<int> parent_arc(heads_.size());
    while (flow < flow_cap) {
      if (!find_path(parent_arc)) break;
      int push = kFlowInf;
      for (int v = sink_; v != source_; v = arcs_[parent_arc[v] ^ 1].to)
        push = std::min(push, arcs_[parent_arc[v]].cap);
      for (int v = sink_; v != source_; v = arcs_[parent_arc[v] ^ 1].to) {
        arcs_[parent_arc[v]].cap -= push;
        arcs_[parent_arc[v] ^ 1].cap += push;
      }
      flow += push;
    }
    return flow;
  }

  // Nodes reachable from the source in the residual network.
  std::vector<char> source_side() const {
    std::vector<char> seen(heads_.size(), 0);
    std::queue<int> q;
    seen[source_] = 1;
    q.push(source_);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : heads_[u]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          q.push(a.to);
        }
      }
    }
    return seen;
  }

  // Nodes from which the sink is reachable in the residual network.
  std::vector<char> sink_side() const {
    std::vector<char> seen(heads_.size(), 0);
    std::queue<int> q;
    seen[sink_] = 1;
    q.push(sink_);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      // w has a residual arc into u exactly when the partner of an arc
      // u->w still has capacity left.
      for (int id : heads_[u]) {
        int w = arcs_[id].to;
        if (arcs_[id ^ 1].cap > 0 && !seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };

  bool find_path(std::vector<int>& parent_arc) const {
    std::vector<char> seen(heads_.size(), 0);
    std::queue<int> q;
    seen[source_] = 1;
    q.push(source_);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : heads_[u]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          parent_arc[a.to] = id;
          if (a.to == sink_) return true;
          q.push(a.to);
        }
      }
    }
    return false;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> heads_;
  int source_ = -1;
  int sink_ = -1;
};

}  // namespace augment
