#include <set>

#include "augment/flow_cut.hpp"
#include "augment/oracle.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace augment;
using namespace augment::testing;

namespace {

// Exhaustive reference for min_constrained_separation: minimum order over
// all separations with force_a <= A, force_b <= B, and strict witnesses on
// both sides. -1 when no such separation exists at any order.
int constrained_minimum_by_enumeration(const Graph& g, const std::vector<Vertex>& force_a,
                                       const std::vector<Vertex>& force_b) {
  int best = -1;
  for (const Separation& s : all_separations(g)) {
    bool ok = true, witness_a = false, witness_b = false;
    for (Vertex x : force_a) {
      ok = ok && s.in_a(x);
      witness_a = witness_a || (s.in_a(x) && !s.in_b(x));
    }
    for (Vertex y : force_b) {
      ok = ok && s.in_b(y);
      witness_b = witness_b || (s.in_b(y) && !s.in_a(y));
    }
    if (!ok || !witness_a || !witness_b) continue;
    if (best < 0 || s.order() < best) best = s.order();
  }
  return best;
}

}  // namespace

TEST_CASE("leftmost/rightmost minimum separations on P4") {
  // a=1, x=2, y=3, b=4
  const Graph p4 = path_graph(4);
  MinSeparations ms = leftmost_rightmost_separation(p4, 1, 4);
  CHECK(ms.order == 1);
  CHECK(ms.leftmost == Separation{{1, 2}, {2, 3, 4}});
  CHECK(ms.rightmost == Separation{{1, 2, 3}, {3, 4}});

  // frozen values agree with exhaustive enumeration
  std::vector<Separation> all = enumerate_min_separations(p4, 1, 4);
  CHECK(all.size() == 2);
  for (const Separation& s : all) {
    CHECK(subset_of(ms.leftmost.side_a, s.side_a));
    CHECK(subset_of(s.side_a, ms.rightmost.side_a));
    CHECK(subset_of(ms.rightmost.side_b, s.side_b));
    CHECK(subset_of(s.side_b, ms.leftmost.side_b));
  }
}

TEST_CASE("leftmost equals rightmost when the minimum separation is unique") {
  // two-leaf star: center 3, leaves 1 and 2
  Graph star(3);
  star.add_edge(3, 1);
  star.add_edge(3, 2);
  MinSeparations ms = leftmost_rightmost_separation(star, 1, 2);
  CHECK(ms.order == 1);
  CHECK(ms.leftmost == ms.rightmost);
  CHECK(ms.leftmost == Separation{{1, 3}, {2, 3}});
  CHECK(enumerate_min_separations(star, 1, 2).size() == 1);

  // 3-connected pair with a unique minimum separator: K5 minus edge {1,2}
  Graph g = complete_graph(5);
  Graph h(5);
  for (VertexPair e : g.edges())
    if (!(e == VertexPair{1, 2})) h.add_edge(e);
  MinSeparations unique = leftmost_rightmost_separation(h, 1, 2);
  CHECK(unique.order == 3);
  CHECK(unique.leftmost == unique.rightmost);
}

TEST_CASE("leftmost_rightmost_separation rejects adjacent endpoints") {
  CHECK_THROWS_AS(leftmost_rightmost_separation(cycle_graph(3), 1, 2), std::invalid_argument);
}

TEST_CASE("pair_vertex_connectivity") {
  CHECK(pair_vertex_connectivity(path_graph(4), 1, 4, 10) == 1);
  // clique convention: adjacent pairs are connected for every threshold
  CHECK(pair_vertex_connectivity(complete_graph(4), 1, 2, 100) == 100);
  CHECK(pair_vertex_connectivity(cycle_graph(4), 1, 3, 10) == 2);
  // capping
  CHECK(pair_vertex_connectivity(cycle_graph(4), 1, 3, 2) == 2);
  CHECK(pair_vertex_connectivity(cycle_graph(4), 1, 3, 1) == 1);
}

TEST_CASE("is_lambda_vertex_connected") {
  CHECK(is_lambda_vertex_connected(cycle_graph(4), 2));
  CHECK_FALSE(is_lambda_vertex_connected(cycle_graph(4), 3));
  CHECK(is_lambda_vertex_connected(complete_graph(5), 100));
  CHECK(is_lambda_vertex_connected(Graph(1), 5));
  CHECK_FALSE(is_lambda_vertex_connected(path_graph(3), 2));
}

TEST_CASE("leftmost/rightmost minimum cuts on P4") {
  const Graph p4 = path_graph(4);
  MinCuts mc = leftmost_rightmost_cut(p4, 1, 4);
  CHECK(mc.order == 1);
  CHECK(mc.leftmost == Cut{{1}, {2, 3, 4}});
  CHECK(mc.rightmost == Cut{{1, 2, 3}, {4}});

  // all (1,4)-cuts, oriented, against the frozen extremes
  int seen = 0;
  for (const Cut& c : enumerate_cuts(p4, 4)) {
    Cut oriented = c.in_a(1) ? c : c.flipped();
    if (!oriented.in_b(4)) continue;
    ++seen;
    if (oriented.order(p4) > 1) continue;
    CHECK(subset_of(mc.leftmost.side_a, oriented.side_a));
    CHECK(subset_of(oriented.side_a, mc.rightmost.side_a));
  }
  CHECK(seen == 4);  // 2^2 assignments of the middle vertices
}

TEST_CASE("minimum cut of a disconnected pair is the component") {
  Graph g(5);  // component {1,2}, component {3,4,5}
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  MinCuts mc = leftmost_rightmost_cut(g, 1, 4);
  CHECK(mc.order == 0);
  CHECK(mc.leftmost == Cut{{1, 2}, {3, 4, 5}});
}

TEST_CASE("cuts allow adjacent endpoints") {
  MinCuts mc = leftmost_rightmost_cut(cycle_graph(4), 1, 2);
  CHECK(mc.order == 2);
}

TEST_CASE("is_lambda_edge_connected") {
  CHECK(is_lambda_edge_connected(cycle_graph(4), 2));
  CHECK_FALSE(is_lambda_edge_connected(path_graph(3), 2));
  CHECK(is_lambda_edge_connected(Graph(1), 9));
  CHECK_FALSE(is_lambda_edge_connected(Graph(2), 1));  // disconnected
}

TEST_CASE("crosses") {
  // separation ({a,x},{x,y,b}) on P4 with a=1,x=2,y=3,b=4
  const Separation s{{1, 2}, {2, 3, 4}};
  CHECK(crosses(Link{1, 4}, s));
  CHECK_FALSE(crosses(Link{2, 3}, s));  // 2 sits in the separator
  const Cut c{{1}, {2, 3, 4}};
  CHECK(crosses(Link{1, 4}, c));
  CHECK_FALSE(crosses(Link{2, 4}, c));
}

TEST_CASE("min_constrained_separation fixtures") {
  const Graph p4 = path_graph(4);

  SUBCASE("plain endpoint pair") {
    ConstrainedSeparation r =
        min_constrained_separation(p4, std::vector<Vertex>{1}, std::vector<Vertex>{4}, 2);
    REQUIRE(r.status == SepSearchStatus::found);
    CHECK(r.order == 1);
    CHECK(constrained_minimum_by_enumeration(p4, {1}, {4}) == 1);
  }
  SUBCASE("adjacent forced singletons are infeasible in a triangle") {
    ConstrainedSeparation r = min_constrained_separation(
        cycle_graph(3), std::vector<Vertex>{1}, std::vector<Vertex>{2}, 99);
    CHECK(r.status == SepSearchStatus::infeasible);
    CHECK(constrained_minimum_by_enumeration(cycle_graph(3), {1}, {2}) == -1);
  }
  SUBCASE("forced vertices may land in the separator") {
    ConstrainedSeparation r =
        min_constrained_separation(p4, std::vector<Vertex>{1, 3}, std::vector<Vertex>{4}, 2);
    REQUIRE(r.status == SepSearchStatus::found);
    CHECK(r.order == 1);
    CHECK(r.separation == Separation{{1, 2, 3}, {3, 4}});
    CHECK(constrained_minimum_by_enumeration(p4, {1, 3}, {4}) == 1);
  }
  SUBCASE("cap semantics") {
    ConstrainedSeparation r =
        min_constrained_separation(p4, std::vector<Vertex>{1}, std::vector<Vertex>{4}, 1);
    CHECK(r.status == SepSearchStatus::at_least_cap);
  }
  SUBCASE("extremes without witnesses fall back to pinned pairs") {
    // path 1-2-3: the weak minimum may cut a forced terminal itself; the
    // answer must still keep both terminals strictly on their sides.
    const Graph p3 = path_graph(3);
    ConstrainedSeparation r =
        min_constrained_separation(p3, std::vector<Vertex>{1}, std::vector<Vertex>{3}, 3);
    REQUIRE(r.status == SepSearchStatus::found);
    CHECK(r.order == 1);
    CHECK((r.separation.in_a(1) && !r.separation.in_b(1)));
    CHECK((r.separation.in_b(3) && !r.separation.in_a(3)));
  }
}

TEST_CASE("min_constrained_separation matches enumeration on random graphs") {
  SplitMix64 rng(0xFC01);
  int done = 0;
  while (done < 60) {
    const int n = 3 + static_cast<int>(rng.next_below(5));  // 3..7
    Graph g = random_graph(n, 0.2 + 0.2 * static_cast<double>(rng.next_below(3)), rng);
    std::vector<Vertex> fa, fb;
    for (Vertex v = 1; v <= n; ++v) {
      const std::uint64_t roll = rng.next_below(4);
      if (roll == 0) fa.push_back(v);
      if (roll == 1) fb.push_back(v);
    }
    if (fa.empty() || fb.empty()) continue;
    ++done;
    const int expected = constrained_minimum_by_enumeration(g, fa, fb);
    ConstrainedSeparation r = min_constrained_separation(g, fa, fb, n + 1);
    if (expected < 0) {
      CHECK(r.status == SepSearchStatus::infeasible);
    } else {
      REQUIRE(r.status == SepSearchStatus::found);
      CHECK(r.order == expected);
      CHECK(r.separation.valid_for(g));
      CHECK(r.separation.order() == expected);
      for (Vertex x : fa) CHECK(r.separation.in_a(x));
      for (Vertex y : fb) CHECK(r.separation.in_b(y));
    }
  }
}

TEST_CASE("min_constrained_cut merges forced sides into the terminals") {
  // triangle {1,2,3} + triangle {4,5,6}, disjoint
  Graph g(6);
  for (auto [u, v] :
       {std::pair{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}})
    g.add_edge(u, v);
  auto cut = min_constrained_cut(g, std::vector<Vertex>{1, 4}, std::vector<Vertex>{5}, 3);
  REQUIRE(cut.has_value());
  CHECK(cut->order(g) == 2);  // 4 and 5 sit in the same triangle
  CHECK(cut->in_a(1));
  CHECK(cut->in_a(4));
  CHECK(cut->in_b(5));
  CHECK_THROWS_AS(min_constrained_cut(g, std::vector<Vertex>{1}, std::vector<Vertex>{1}, 3),
                  std::invalid_argument);
}

TEST_CASE("separation submodularity on sampled pairs") {
  SplitMix64 rng(0xAB5E);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(7));  // 2..8
    Graph g = random_graph(n, 0.1 + 0.2 * static_cast<double>(rng.next_below(4)), rng);
    Separation s1 = random_separation(g, rng);
    Separation s2 = random_separation(g, rng);
    const auto& a = s1.side_a;
    const auto& b = s1.side_b;
    const auto& c = s2.side_a;
    const auto& d = s2.side_b;
    const int lhs = static_cast<int>(
                        sorted_intersection(sorted_intersection(a, c), sorted_union(b, d)).size()) +
                    static_cast<int>(
                        sorted_intersection(sorted_union(a, c), sorted_intersection(b, d)).size());
    CHECK(lhs <= s1.order() + s2.order());

    // corner separation stays a separation
    Separation corner{sorted_intersection(a, c), sorted_union(b, d)};
    CHECK(corner.valid_for(g));
  }
}

TEST_CASE("cut submodularity on sampled pairs") {
  SplitMix64 rng(0xC0DE);
  auto boundary_size = [](const Graph& g, const std::vector<Vertex>& a,
                          const std::vector<Vertex>& b) {
    int count = 0;
    for (Vertex u : a)
      for (Vertex w : g.neighbors(u))
        if (sorted_contains(b, w)) ++count;
    return count;
  };
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    Graph g = random_graph(n, 0.1 + 0.2 * static_cast<double>(rng.next_below(4)), rng);
    Cut c1 = random_cut(g, rng);
    Cut c2 = random_cut(g, rng);
    const int lhs = boundary_size(g, sorted_intersection(c1.side_a, c2.side_a),
                                  sorted_union(c1.side_b, c2.side_b)) +
                    boundary_size(g, sorted_union(c1.side_a, c2.side_a),
                                  sorted_intersection(c1.side_b, c2.side_b));
    CHECK(lhs <= c1.order(g) + c2.order(g));
  }
}

TEST_CASE("extremal separations bound every enumerated minimum separation") {
  SplitMix64 rng(0x5EED);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(6));  // 3..8
    Graph g = random_graph(n, 0.3 + 0.1 * static_cast<double>(rng.next_below(4)), rng);
    for (Vertex a = 1; a <= n; ++a)
      for (Vertex b = a + 1; b <= n; ++b) {
        if (g.has_edge(a, b)) continue;
        MinSeparations ms = leftmost_rightmost_separation(g, a, b);
        for (const Separation& s : enumerate_min_separations(g, a, b)) {
          CHECK(s.order() == ms.order);
          CHECK(subset_of(ms.leftmost.side_a, s.side_a));
          CHECK(subset_of(s.side_a, ms.rightmost.side_a));
          CHECK(subset_of(ms.rightmost.side_b, s.side_b));
          CHECK(subset_of(s.side_b, ms.leftmost.side_b));
        }
      }
  }
}

TEST_CASE("adding one pair raises vertex connectivity by at most one") {
  SplitMix64 rng(0x0B51);
  int done = 0;
  while (done < 120) {
    const int n = 3 + static_cast<int>(rng.next_below(6));
    Graph g = random_graph(n, 0.2 + 0.2 * static_cast<double>(rng.next_below(4)), rng);
    const int before = vertex_connectivity(g, n);
    if (before >= n - 2) continue;  // near-clique, adding an edge may complete it
    std::vector<VertexPair> non_edges;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v)
        if (!g.has_edge(u, v)) non_edges.push_back({u, v});
    REQUIRE(!non_edges.empty());
    VertexPair e = non_edges[rng.next_below(non_edges.size())];
    Graph h = g;
    h.add_edge(e);
    const int after = vertex_connectivity(h, n);
    CHECK(after <= before + 1);
    CHECK(after >= before);
    ++done;
  }
}

TEST_CASE("constrained separation on C5 fixed fixture") {
  const Graph c5 = cycle_graph(5);
  CHECK(constrained_minimum_by_enumeration(c5, {1}, {3}) == 2);
  ConstrainedSeparation r =
      min_constrained_separation(c5, std::vector<Vertex>{1}, std::vector<Vertex>{3}, 10);
  REQUIRE(r.status == SepSearchStatus::found);
  CHECK(r.order == 2);
}
