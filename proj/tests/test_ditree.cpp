#include <doctest.h>

#include "metdim/classify.hpp"
#include "metdim/ditree.hpp"
#include "metdim/generate.hpp"
#include "metdim/oracle.hpp"
#include "support.hpp"

using namespace metdim;
using namespace testing_support;

namespace {

ComponentContext context_of(const DiGraph& g, Vertex member) {
  const auto sccs = strongly_connected_components(g);
  return component_context(g, sccs, sccs.component_of[member]);
}

// Apex 0 over four children: 3 ends the escalator 1<->2<->3, 6 starts the
// escalator 6<->7 (which leaves through 7->9), 4 and 5 are single vertices.
DiGraph almost_twin_apex() {
  return make(10, {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {6, 7}, {7, 6}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {4, 8}, {7, 9}});
}

// One large strongly connected component (digons) with four pendant legs at
// 0 and four at 2, plus a second component 7<->11 entered from 6.
// Sources 10 and 20; dummies 3 (from 10) and 19 (from 20).
DiGraph walkthrough_tree() {
  std::vector<Arc> arcs;
  auto digon = [&](Vertex u, Vertex v) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  };
  for (auto [u, v] : std::vector<std::pair<Vertex, Vertex>>{{0, 1},   {1, 2},   {7, 11},  {0, 3},  {3, 4},
                                                            {4, 5},   {0, 13},  {0, 14},  {14, 15}, {15, 16},
                                                            {2, 18},  {18, 19}, {2, 22},  {22, 23}, {2, 24},
                                                            {2, 25},  {25, 26}}) {
    digon(u, v);
  }
  arcs.insert(arcs.end(), {{11, 12}, {4, 6}, {6, 7}, {6, 8}, {6, 9}, {10, 3}, {15, 17}, {20, 19}, {20, 21}, {26, 27}});
  return make(28, arcs);
}

}  // namespace

TEST_CASE("escalators") {
  const auto g = make(4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}});
  const auto esc = detect_escalators(g, strongly_connected_components(g));
  REQUIRE(esc.size() == 1);
  CHECK(esc[0].entry() == 1);
  CHECK(esc[0].exit() == 2);
  CHECK(esc[0].entered_from == 0);
  CHECK(esc[0].exits == std::vector<Vertex>{3});

  const auto two_entries = make(4, {{0, 1}, {1, 2}, {2, 1}, {3, 2}});
  CHECK(detect_escalators(two_entries, strongly_connected_components(two_entries)).empty());

  const auto wrong_exit = make(4, {{0, 1}, {1, 2}, {2, 1}, {1, 3}});
  CHECK(detect_escalators(wrong_exit, strongly_connected_components(wrong_exit)).empty());

  // a longer escalator entered at one end and left at the other
  const auto long_one = make(6, {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {4, 5}});
  const auto found = detect_escalators(long_one, strongly_connected_components(long_one));
  REQUIRE(found.size() == 1);
  CHECK(found[0].path == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("almost-in-twins") {
  SUBCASE("in-twins of an out-star") {
    const auto g = out_star(3);
    const auto sccs = strongly_connected_components(g);
    const auto classes = almost_in_twin_classes(g, sccs, detect_escalators(g, sccs));
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].apex == 0);
    CHECK(classes[0].members == std::vector<Vertex>{1, 2, 3});
  }
  SUBCASE("apex over escalator endpoints") {
    const auto g = almost_twin_apex();
    const auto sccs = strongly_connected_components(g);
    const auto classes = almost_in_twin_classes(g, sccs, detect_escalators(g, sccs));
    // 4 and 7 are apexes of single members
    REQUIRE(classes.size() == 3);
    CHECK(classes[0].apex == 0);
    CHECK(classes[1].members == std::vector<Vertex>{8});
    CHECK(classes[2].members == std::vector<Vertex>{9});
    CHECK(classes[0].members == std::vector<Vertex>{3, 4, 5, 6});
    CHECK(classes[0].kinds == std::vector<TwinKind>{TwinKind::EscalatorEndpoint, TwinKind::TrivialScc,
                                                    TwinKind::TrivialScc, TwinKind::EscalatorEndpoint});
  }
  SUBCASE("a digon partner is not an almost-in-twin") {
    const auto g = make(4, {{0, 1}, {1, 0}, {0, 2}, {0, 3}});
    const auto sccs = strongly_connected_components(g);
    const auto classes = almost_in_twin_classes(g, sccs, detect_escalators(g, sccs));
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members == std::vector<Vertex>{2, 3});
  }
}

TEST_CASE("component context") {
  const auto fed_from_outside = make(4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}});
  CHECK(context_of(fed_from_outside, 1).dummies() == std::vector<Vertex>{1});
  CHECK(context_of(digon_path(3), 0).dummies().empty());
  CHECK(context_of(walkthrough_tree(), 0).dummies() == std::vector<Vertex>{3, 19});

  const auto sccs = strongly_connected_components(walkthrough_tree());
  std::size_t nontrivial = 0;
  for (std::uint32_t c = 0; c < sccs.count(); ++c) nontrivial += !sccs.is_trivial(c);
  CHECK(nontrivial == 2);
}

TEST_CASE("special legs") {
  const auto g = make(5, {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {2, 4}});
  const auto legs = detect_special_legs(context_of(g, 1));
  REQUIRE(legs.size() == 1);
  CHECK(legs[0].path == std::vector<Vertex>{1, 2, 3});
  CHECK(legs[0].endpoint() == 3);
  CHECK(legs[0].witness == Arc{2, 4});

  CHECK(detect_special_legs(context_of(digon_path(3), 0)).empty());
  const auto endpoint_exit = make(5, {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}});
  CHECK(detect_special_legs(context_of(endpoint_exit, 1)).empty());
}

TEST_CASE("path components") {
  CHECK(solve_path_component(context_of(digon_path(3), 0)) == std::vector<Vertex>{0});
  // single exit at endpoint 2: the other endpoint
  CHECK(solve_path_component(context_of(make(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}}), 0)) ==
        std::vector<Vertex>{0});
  CHECK(solve_path_component(context_of(make(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 3}}), 0)) ==
        std::vector<Vertex>{2});
  // exits at both ends, or from the middle: both endpoints
  CHECK(solve_path_component(context_of(make(5, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 3}, {2, 4}}), 0)) ==
        std::vector<Vertex>{0, 2});
  CHECK(solve_path_component(context_of(make(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {1, 3}}), 0)) ==
        std::vector<Vertex>{0, 2});
  // one entry in the middle without an exit there
  CHECK(solve_path_component(context_of(make(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {3, 1}}), 0)) ==
        std::vector<Vertex>{0});
  // one entry at an endpoint
  CHECK(solve_path_component(context_of(make(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {3, 0}}), 0)).empty());

  const auto star = make(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}});
  CHECK_THROWS_AS(solve_path_component(context_of(star, 0)), std::invalid_argument);
}

TEST_CASE("remaining legs") {
  const auto star = make(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}});
  const std::vector<char> none(4, 0);
  CHECK(solve_component_legs(context_of(star, 0), none) == std::vector<Vertex>{1, 2});

  const auto fed_leg = make(5, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}, {4, 3}});
  std::vector<char> in_basis(5, 0);
  in_basis[4] = 1;
  CHECK(solve_component_legs(context_of(fed_leg, 0), in_basis) == std::vector<Vertex>{1});

  // a leg that already holds a basis vertex does not count
  std::vector<char> one_in(4, 0);
  one_in[2] = 1;
  CHECK(solve_component_legs(context_of(star, 0), one_in) == std::vector<Vertex>{1});
}

TEST_CASE("strong basis of di-trees") {
  CHECK(metric_basis_ditree(directed_path(1)).vertices == std::vector<Vertex>{0});
  const auto leg = make(5, {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {2, 4}});
  CHECK(metric_basis_ditree(leg).vertices == std::vector<Vertex>{0, 3});
  const std::vector<Vertex> just_source{0};
  CHECK_FALSE(is_resolving(leg, just_source, Mode::Strong));
  CHECK(metric_basis_ditree(out_star(3)).vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(metric_basis_ditree(out_star(3)).producer == "ditree");
  CHECK_THROWS_AS(metric_basis_ditree(directed_cycle(3)), std::invalid_argument);

  SUBCASE("walkthrough instance") {
    const auto g = walkthrough_tree();
    const auto b = metric_basis_ditree(g);
    // sources, two of the three almost-in-twins below 6, both special-leg
    // endpoints and two of the three free legs at 2
    CHECK(b.vertices == std::vector<Vertex>{5, 7, 8, 10, 16, 20, 23, 24});
    CHECK(is_resolving(g, b.vertices, Mode::Strong));
    CHECK(b.size() == 8);
    CHECK(min_resolving_set(g, Mode::Strong, 28).dimension == 8);
  }
  SUBCASE("apex over escalator endpoints") {
    const auto g = almost_twin_apex();
    const auto b = metric_basis_ditree(g);
    CHECK(is_resolving(g, b.vertices, Mode::Strong));
    CHECK(b.size() == min_resolving_set(g, Mode::Strong).dimension);
  }
}

TEST_CASE("strong basis properties on random di-trees") {
  GenParams p;
  for (double dp : {0.0, 0.3, 0.7, 1.0}) {
    p.digon_prob = dp;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      const auto g = random_instance(InstanceClass::DiTree, 1 + seed % 10, p, seed);
      const auto b = metric_basis_ditree(g);
      CHECK(is_resolving(g, b.vertices, Mode::Strong));
      CHECK(b.size() == min_resolving_set(g, Mode::Strong).dimension);
      for (Vertex s : sources(g)) CHECK(contains(b.vertices, s));
      const auto sccs = strongly_connected_components(g);
      for (const auto& cls : almost_in_twin_classes(g, sccs, detect_escalators(g, sccs))) {
        std::size_t inside = 0;
        for (Vertex v : cls.members) inside += contains(b.vertices, v);
        CHECK(inside + 1 >= cls.members.size());
      }
    }
  }
}

TEST_CASE("weak basis of di-trees") {
  CHECK(weak_metric_basis_ditree(directed_path(3)).vertices == std::vector<Vertex>{0});
  const auto shared_sink = make(3, {{0, 2}, {1, 2}});
  const auto weak = weak_metric_basis_ditree(shared_sink);
  CHECK(weak.size() == 1);
  CHECK(is_resolving(shared_sink, weak.vertices, Mode::Weak));
  CHECK(weak_metric_basis_ditree(directed_path(1)).vertices.empty());
  // equal-size strong bases differ in which source can go
  const auto g = make(4, {{0, 1}, {1, 0}, {0, 3}, {2, 3}});
  CHECK(weak_metric_basis_ditree(g).size() == 1);

  GenParams p;
  for (double dp : {0.0, 0.3, 0.7, 1.0}) {
    p.digon_prob = dp;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto t = random_instance(InstanceClass::DiTree, 1 + seed % 10, p, seed);
      const auto w = weak_metric_basis_ditree(t);
      const auto s = metric_basis_ditree(t);
      CHECK(w.mode == Mode::Weak);
      CHECK(is_resolving(t, w.vertices, Mode::Weak));
      CHECK(w.size() == min_resolving_set(t, Mode::Weak).dimension);
      CHECK((w.size() == s.size() || w.size() + 1 == s.size()));
    }
  }
}
