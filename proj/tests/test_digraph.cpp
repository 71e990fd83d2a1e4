#include <doctest.h>

#include <random>

#include "metdim/classify.hpp"
#include "metdim/distances.hpp"
#include "metdim/generate.hpp"
#include "metdim/io.hpp"
#include "metdim/scc.hpp"
#include "support.hpp"

using namespace metdim;
using namespace testing_support;

TEST_CASE("edge list parsing") {
  SUBCASE("plain path") {
    const auto g = parse_edge_list("3 2\n0 1\n1 2");
    CHECK(g.order() == 3);
    CHECK(std::vector<Arc>(g.arcs().begin(), g.arcs().end()) == std::vector<Arc>{{0, 1}, {1, 2}});
  }
  SUBCASE("digon") {
    const auto g = parse_edge_list("2 2\n0 1\n1 0");
    CHECK(g.has_digon(0, 1));
    CHECK(digon_count(g) == 1);
  }
  SUBCASE("comments are skipped") {
    const auto g = parse_edge_list("# header comment\n3 1\n# between\n2 0\n");
    CHECK(g.has_arc(2, 0));
  }
  SUBCASE("errors carry line numbers") {
    auto line_of = [](const char* text) {
      try {
        parse_edge_list(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return std::size_t{0};
    };
    CHECK(line_of("2 2\n0 1\n0 1") == 3);   // duplicate
    CHECK(line_of("2 1\n0 2") == 2);        // out of range
    CHECK(line_of("2 1\n1 1") == 2);        // self-loop
    CHECK(line_of("x y\n") == 1);           // header
    CHECK(line_of("3 2\n0 1\n") != 0);      // too few arcs
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  }
  SUBCASE("round trip") {
    GenParams p;
    p.arc_prob = 0.4;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto g = random_instance(InstanceClass::Random, 7, p, seed);
      CHECK(parse_edge_list(to_edge_list(g, {"note"})) == g);
    }
  }
  SUBCASE("dot export lists every arc") {
    const auto dot = to_dot(directed_path(3));
    CHECK(dot.find("0 -> 1") != std::string::npos);
    CHECK(dot.find("1 -> 2") != std::string::npos);
  }
}

TEST_CASE("digraph invariants") {
  CHECK_THROWS_AS(DiGraph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(DiGraph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(DiGraph(2, {{0, 1}, {0, 1}}), std::invalid_argument);

  GenParams p;
  p.arc_prob = 0.3;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_instance(InstanceClass::Random, 9, p, seed);
    std::size_t out = 0;
    std::size_t in = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      out += g.out_degree(v);
      in += g.in_degree(v);
      for (Vertex w : g.out_neighbors(v)) CHECK(contains({g.in_neighbors(w).begin(), g.in_neighbors(w).end()}, v));
    }
    CHECK(out == g.arc_count());
    CHECK(in == g.arc_count());
  }
}

TEST_CASE("induced subgraphs and weak components") {
  const auto g = make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 3}});
  const auto parts = weak_components(g);
  CHECK(parts == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4}, {5}});
  std::vector<char> removed(6, 0);
  removed[1] = 1;
  CHECK(weak_components(g, removed) == std::vector<std::vector<Vertex>>{{0}, {2}, {3, 4}, {5}});
  const std::vector<Vertex> keep{1, 2, 4};
  const auto h = induced_subgraph(g, keep);
  CHECK(h.order() == 3);
  CHECK(h.arc_count() == 1);
  CHECK(h.has_arc(0, 1));
}

TEST_CASE("bfs distances") {
  const auto path = directed_path(3);
  CHECK(bfs_distances(path, 0) == std::vector<Distance>{0, 1, 2});
  CHECK(bfs_distances(path, 2) == std::vector<Distance>{kInf, kInf, 0});
  CHECK(bfs_distances(digon_path(2), 0) == std::vector<Distance>{0, 1});
  CHECK(reverse_bfs_distances(path, 2) == std::vector<Distance>{2, 1, 0});
}

TEST_CASE("all pairs distances") {
  SUBCASE("directed 3-cycle") {
    const auto d = all_pairs_distances(directed_cycle(3));
    for (Vertex i = 0; i < 3; ++i) {
      for (Vertex j = 0; j < 3; ++j) CHECK(d(i, j) == (j + 3 - i) % 3);
    }
  }
  SUBCASE("isolated vertices") {
    const auto d = all_pairs_distances(make(2, {}));
    CHECK(d(0, 1) == kInf);
    CHECK(d(1, 0) == kInf);
    CHECK(d.max_finite() == 0);
  }
  SUBCASE("Floyd-Warshall, BFS rows and the reference agree") {
    GenParams p;
    for (double prob : {0.15, 0.3, 0.6}) {
      p.arc_prob = prob;
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = random_instance(InstanceClass::Random, 6 + seed % 5, p, seed);
        const auto fw = all_pairs_distances(g);
        CHECK(fw == bfs_all_pairs(g));
        const auto ref = reference_distances(g);
        for (Vertex i = 0; i < g.order(); ++i) {
          CHECK(std::vector<Distance>(fw.row(i).begin(), fw.row(i).end()) == bfs_distances(g, i));
          for (Vertex j = 0; j < g.order(); ++j) {
            const Distance expected = ref[i][j] == kUnreachable ? kInf : ref[i][j];
            CHECK(fw(i, j) == expected);
            CHECK((fw(i, j) == 1) == g.has_arc(i, j));
            for (Vertex w = 0; w < g.order(); ++w) {
              if (fw(i, w) != kInf && fw(w, j) != kInf) CHECK(fw(i, j) <= fw(i, w) + fw(w, j));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("strongly connected components") {
  SUBCASE("dag gives singletons") {
    GenParams p;
    p.arc_prob = 0.5;
    const auto g = random_instance(InstanceClass::Dag, 10, p, 3);
    CHECK(strongly_connected_components(g).count() == 10);
  }
  SUBCASE("digon path is one component") {
    CHECK(strongly_connected_components(digon_path(3)).count() == 1);
  }
  SUBCASE("matches mutual reachability, ids topological") {
    GenParams p;
    for (double prob : {0.15, 0.3, 0.5}) {
      p.arc_prob = prob;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = random_instance(InstanceClass::Random, 1 + seed % 8, p, seed);
        const auto s = strongly_connected_components(g);
        const auto d = reference_distances(g);
        for (Vertex u = 0; u < g.order(); ++u) {
          for (Vertex v = 0; v < g.order(); ++v) {
            CHECK(s.same(u, v) == (d[u][v] != kUnreachable && d[v][u] != kUnreachable));
          }
        }
        for (const Arc& a : g.arcs()) CHECK(s.component_of[a.from] <= s.component_of[a.to]);
      }
    }
  }
}

TEST_CASE("classification") {
  CHECK(classify(digon_path(2)).kind == ClassKind::DiTree);
  CHECK(classify(directed_path(1)).kind == ClassKind::DiTree);
  const auto c3 = classify(directed_cycle(3));
  CHECK(c3.kind == ClassKind::OrientedUnicyclic);
  CHECK(c3.cycle == std::vector<Vertex>{0, 1, 2});
  // the 3-cycle with a digon pendant is neither class
  CHECK(classify(make(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 2}})).kind == ClassKind::Other);
  CHECK(classify(make(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})).kind == ClassKind::OrientedUnicyclic);
  CHECK(classify(make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}})).kind == ClassKind::Dag);
  CHECK(classify(make(3, {{0, 1}})).kind == ClassKind::Other);  // disconnected
  CHECK(classify(bidirected_complete(3)).kind == ClassKind::Other);
}

TEST_CASE("random instances") {
  GenParams p;
  p.digon_prob = 0.5;
  CHECK(random_instance(InstanceClass::DiTree, 1, p, 7).order() == 1);
  CHECK(random_instance(InstanceClass::DiTree, 30, p, 9) == random_instance(InstanceClass::DiTree, 30, p, 9));
  CHECK_THROWS_AS(random_instance(InstanceClass::DiTree, 0, p, 1), std::invalid_argument);
  p.digon_prob = 1.5;
  CHECK_THROWS_AS(random_instance(InstanceClass::DiTree, 4, p, 1), std::invalid_argument);
  p.digon_prob = 0.3;
  p.cycle_len = 5;
  CHECK_THROWS_AS(random_instance(InstanceClass::OrientedUnicyclic, 4, p, 1), std::invalid_argument);

  p.cycle_len = 3;
  const auto tri = random_instance(InstanceClass::OrientedUnicyclic, 3, p, 1);
  CHECK(tri.arc_count() == 3);
  CHECK(classify(tri).kind == ClassKind::OrientedUnicyclic);

  for (double dp : {0.0, 0.3, 0.7, 1.0}) {
    p.digon_prob = dp;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const std::size_t n = 1 + seed % 15;
      const auto t = random_instance(InstanceClass::DiTree, n, p, seed);
      CHECK(classify(t).kind == ClassKind::DiTree);
      CHECK(underlying_edge_count(t) == n - 1);
      CHECK(is_weakly_connected(t));
      CHECK(classify(path_heavy_instance(InstanceClass::DiTree, n, p, seed)).kind == ClassKind::DiTree);
    }
  }
  for (std::size_t len = 3; len <= 8; ++len) {
    p.cycle_len = len;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto u = random_instance(InstanceClass::OrientedUnicyclic, len + seed % 6, p, seed);
      const auto cls = classify(u);
      CHECK(cls.kind == ClassKind::OrientedUnicyclic);
      CHECK(cls.cycle.size() == len);
      CHECK(digon_count(u) == 0);
    }
  }
}
