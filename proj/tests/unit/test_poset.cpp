#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "posetlab/families.hpp"
#include "posetlab/poset.hpp"

using namespace posetlab;
using fixtures::chain_of;

TEST_CASE("diamond basics") {
  Poset p = fixtures::diamond();
  CHECK(p.size() == 4);
  CHECK(p.edges().size() == 4);
  CHECK(p.leq(p.id("0"), p.id("1")));
  CHECK_FALSE(p.comparable(p.id("a"), p.id("b")));
  CHECK(p.covers(p.id("a"), p.id("1")));
  CHECK_FALSE(p.covers(p.id("0"), p.id("1")));
  CHECK(p.bottom() == p.id("0"));
  CHECK(p.top() == p.id("1"));
  CHECK(p.upper_covers(p.id("0")).size() == 2);
  CHECK(p.lower_covers(p.id("1")).size() == 2);
  CHECK(graded_rank(p) == 2u);
  CHECK(p.linear_extension().front() == p.id("0"));
  CHECK(p.linear_extension().back() == p.id("1"));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(build_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
  CHECK_THROWS_AS(build_poset({"a"}, {{"a", "a"}}), CycleError);
  CHECK_THROWS_AS(build_poset({"a", "b"}, {{"a", "c"}}), UnknownElement);
  CHECK_THROWS_AS(build_poset({"a", "a"}, {}), ValidationError);
  CHECK_THROWS_AS(build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
                  NotReducedError);
  Poset reduced =
      build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, Reduction::AutoReduce);
  CHECK(reduced.edges().size() == 2);
  CHECK(reduced.leq(reduced.id("a"), reduced.id("c")));
}

TEST_CASE("bounds") {
  Poset bow = fixtures::bowtie();
  CHECK_FALSE(bow.is_bounded());
  CHECK_THROWS_AS(bow.require_bottom(), NotBounded);
  CHECK_THROWS_AS(bow.require_top(), NotBounded);
  CHECK_THROWS_AS(bow.id("z"), UnknownElement);
  CHECK_FALSE(bow.find("z").has_value());
  CHECK_THROWS_AS(bow.name(99), UnknownElement);
  Poset single = build_poset({"x"}, {});
  CHECK(single.is_bounded());
  CHECK(single.bottom() == single.top());
  CHECK(graded_rank(single) == 0u);
}

TEST_CASE("chains and intervals") {
  Poset p = fixtures::pentagon();
  CHECK(is_chain(p, chain_of(p, {"0", "a", "1"})));
  CHECK_FALSE(is_unrefinable(p, chain_of(p, {"0", "a", "1"})));
  CHECK(is_maximal_chain(p, chain_of(p, {"0", "a", "b", "1"})));
  CHECK(is_maximal_chain(p, chain_of(p, {"0", "c", "1"})));
  CHECK_FALSE(is_chain(p, chain_of(p, {"a", "c"})));
  CHECK(maximal_chains(p).size() == 2);
  CHECK_FALSE(graded_rank(p).has_value());

  CHECK(interval_elements(p, p.id("a"), p.id("1")).size() == 3);
  CHECK_THROWS_AS(interval_elements(p, p.id("a"), p.id("c")), NotComparable);
  Poset sub = interval(p, p.id("0"), p.id("b"));
  CHECK(sub.size() == 3);
  CHECK(sub.edges().size() == 2);
  CHECK(to_string(p, chain_of(p, {"0", "c", "1"})) == "0 < c < 1");
}

TEST_CASE("partition lattice maximal chains") {
  // Oracle: 3 and 18 maximal chains.
  CHECK(maximal_chains(*partition_lattice(3).poset).size() == 3);
  CHECK(maximal_chains(*partition_lattice(4).poset).size() == 18);
}

TEST_CASE("induced subposet keeps the order") {
  Poset p = fixtures::pentagon();
  std::vector<ElementId> keep{p.id("0"), p.id("b"), p.id("c")};
  Poset q = induced_subposet(p, keep);
  CHECK(q.size() == 3);
  CHECK(q.covers(q.id("0"), q.id("b")));
  CHECK(q.covers(q.id("0"), q.id("c")));
  CHECK_FALSE(q.comparable(q.id("b"), q.id("c")));
}

TEST_CASE("order relation is the transitive closure of the input") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 9;
    Poset p = fixtures::random_poset(rng, n, 0.35);
    // Floyd-Warshall closure of the cover edges.
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = 1;
    for (const auto& [a, b] : p.edges()) reach[a][b] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = 1;
    for (ElementId i = 0; i < n; ++i) {
      for (ElementId j = 0; j < n; ++j) {
        CHECK(p.leq(i, j) == static_cast<bool>(reach[i][j]));
      }
    }
    // Every edge is a cover: nothing strictly between.
    for (const auto& [a, b] : p.edges()) {
      for (ElementId c = 0; c < n; ++c) {
        CHECK_FALSE((p.less(a, c) && p.less(c, b)));
      }
    }
    // Linear extension respects the order.
    const auto& topo = p.linear_extension();
    for (const auto& [a, b] : p.edges()) {
      CHECK(std::find(topo.begin(), topo.end(), a) < std::find(topo.begin(), topo.end(), b));
    }
  }
}

TEST_CASE("equality compares names and covers") {
  CHECK(fixtures::diamond() == fixtures::diamond());
  CHECK_FALSE(fixtures::diamond() == fixtures::pentagon());
}
