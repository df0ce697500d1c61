#include <sstream>

#include "augment/core.hpp"
#include "augment/instance_io.hpp"
#include "augment/oracle.hpp"
#include "augment/verify.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace augment;
using namespace augment::testing;

TEST_CASE("parse_instance reads the documented format") {
  const std::string text =
      "c tiny fixture\n"
      "p aug edge 3 2 1 2 1\n"
      "e 1 2\n"
      "e 2 3\n"
      "l 1 3\n";
  Instance inst = parse_instance_text(text);
  CHECK(inst.graph.vertex_count() == 3);
  CHECK(inst.graph.edge_count() == 2);
  CHECK(inst.graph.has_edge(1, 2));
  CHECK(inst.graph.has_edge(2, 3));
  CHECK(inst.links == std::vector<Link>{{1, 3}});
  CHECK(inst.lambda == 2);
  CHECK(inst.budget_k == 1);
  CHECK(inst.mode == Mode::edge);
}

TEST_CASE("parse_instance does not depend on edge/link order") {
  Instance a = parse_instance_text("p aug vertex 4 2 2 1 1\ne 1 2\ne 3 4\nl 1 3\nl 2 4\n");
  Instance b = parse_instance_text("p aug vertex 4 2 2 1 1\nl 2 4\ne 3 4\nl 1 3\ne 1 2\n");
  CHECK(a == b);
}

TEST_CASE("parse_instance rejects malformed input with line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_instance_text(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };

  CHECK(line_of("p aug edge x 0 0 1 0\n") == 1);                              // malformed header
  CHECK(line_of("p aug foo 2 0 0 1 0\n") == 1);                               // bad mode
  CHECK(line_of("p aug edge 2 1 0 1 0\ne 1 5\n") == 2);                       // out of range
  CHECK(line_of("p aug edge 2 2 0 1 0\ne 1 2\ne 2 1\n") == 3);                // duplicate edge
  CHECK(line_of("p aug edge 2 1 1 1 0\ne 1 2\nl 1 2\n") == 3);                // link duplicates edge
  CHECK(line_of("p aug edge 2 0 0 -1 0\n") == 1);                             // negative lambda
  CHECK(line_of("p aug edge 2 0 0 1 -2\n") == 1);                             // negative k
  CHECK(line_of("p aug edge 0 0 0 1 0\n") == 1);                              // n = 0 rejected
  CHECK(line_of("p aug edge 3 0 2 1 1\nl 1 2\nl 2 1\n") == 3);                // duplicate link
  CHECK(line_of("p aug edge 3 1 0 1 0\n") > 0);                               // count mismatch
  CHECK(line_of("e 1 2\n") == 1);                                             // body before header
  CHECK(line_of("p aug edge 2 0 0 1 0\np aug edge 2 0 0 1 0\n") == 2);        // two headers
}

TEST_CASE("serialize then parse is the identity on generated instances") {
  SplitMix64 seeds(20260808);
  for (int trial = 0; trial < 100; ++trial) {
    GeneratorParams params;
    params.n = 2 + static_cast<int>(seeds.next_below(8));
    params.edge_probability = seeds.next_unit();
    params.lambda = 1 + static_cast<int>(seeds.next_below(4));
    params.budget_k = static_cast<int>(seeds.next_below(4));
    params.mode = seeds.next() % 2 == 0 ? Mode::vertex : Mode::edge;
    params.seed = seeds.next();
    params.link_count = 0;
    Instance probe = generate(params);
    const int non_edges =
        params.n * (params.n - 1) / 2 - probe.graph.edge_count();
    params.link_count = static_cast<int>(seeds.next_below(non_edges + 1));
    Instance inst = generate(params);

    Instance round = parse_instance_text(serialize_instance(inst));
    CHECK(round == inst);
  }
}

TEST_CASE("add_links forms the edge-set union") {
  const Graph p3 = path_graph(3);

  SUBCASE("P3 plus the closing link is a triangle") {
    Graph c3 = add_links(p3, std::vector<Link>{{1, 3}});
    CHECK(c3 == cycle_graph(3));
    CHECK(p3.edge_count() == 2);  // input untouched
  }
  SUBCASE("empty union is the identity") {
    CHECK(add_links(p3, {}) == p3);
  }
  SUBCASE("C4 plus both diagonals is K4") {
    Graph k4 = add_links(cycle_graph(4), std::vector<Link>{{1, 3}, {2, 4}});
    CHECK(k4 == complete_graph(4));
  }
  SUBCASE("already-present pairs are absorbed") {
    Graph same = add_links(p3, std::vector<Link>{{1, 2}});
    CHECK(same == p3);
  }
}

TEST_CASE("verify_solution checks membership, budget, and connectivity") {
  Instance inst;
  inst.graph = path_graph(3);
  inst.links = {{1, 3}};
  inst.lambda = 2;
  inst.budget_k = 1;
  inst.mode = Mode::edge;

  CHECK(verify_solution(inst, std::vector<Link>{{1, 3}}).ok);

  inst.mode = Mode::vertex;
  VerifyResult empty = verify_solution(inst, {});
  CHECK_FALSE(empty.ok);
  CHECK(empty.reason == "not lambda-connected");

  inst.mode = Mode::edge;
  inst.budget_k = 0;
  VerifyResult over = verify_solution(inst, std::vector<Link>{{1, 3}});
  CHECK_FALSE(over.ok);
  CHECK(over.reason == "budget exceeded");

  inst.budget_k = 1;
  VerifyResult alien = verify_solution(inst, std::vector<Link>{{2, 3}});
  CHECK_FALSE(alien.ok);
  CHECK(alien.reason == "link not available");
}

TEST_CASE("result format") {
  CHECK(result_to_string(std::nullopt) == "{\"status\":\"no\"}");
  CHECK(result_to_string(Solution{}) == "{\"status\":\"yes\",\"solution\":[]}");
  CHECK(result_to_string(Solution{{2, 4}, {1, 3}}) ==
        "{\"status\":\"yes\",\"solution\":[[1,3],[2,4]]}");
}

TEST_CASE("single-vertex graphs are lambda-connected in both modes") {
  Graph g(1);
  CHECK(is_lambda_vertex_connected(g, 7));
  CHECK(is_lambda_edge_connected(g, 7));
}
