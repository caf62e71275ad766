#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "snlab/errors.hpp"
#include "snlab/matching.hpp"
#include "snlab/theorems.hpp"
#include "support.hpp"

using namespace snlab;

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> es) {
  std::vector<Edge> out;
  for (auto [u, v] : es) out.emplace_back(u, v);
  return Graph(n, out);
}

// All maximum matchings by filtering every edge subset.
std::vector<std::vector<Edge>> subset_maximum_matchings(const Graph& g) {
  std::vector<std::vector<Edge>> best;
  std::size_t size = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
    std::vector<Edge> es;
    std::uint64_t used = 0;
    bool ok = true;
    for (std::size_t e = 0; e < g.size() && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      const Edge& x = g.edge(e);
      const std::uint64_t bits = (std::uint64_t{1} << x.u) | (std::uint64_t{1} << x.v);
      ok = (used & bits) == 0;
      used |= bits;
      es.push_back(x);
    }
    if (!ok) continue;
    if (es.size() > size) {
      size = es.size();
      best.clear();
    }
    if (es.size() == size) best.push_back(es);
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<Graph> unicyclic_up_to(int n) {
  GraphFilter f;
  f.unicyclic_only = true;
  return testing::connected_up_to(n, f);
}

}  // namespace

TEST_CASE("matching construction") {
  CHECK_THROWS_AS(Matching({Edge(0, 1), Edge(1, 2)}), InputError);
  Matching m({Edge(2, 3), Edge(0, 1)});
  CHECK(m.edges()[0] == Edge(0, 1));
  CHECK(m.covers(3));
  CHECK_FALSE(m.covers(4));
  CHECK(m.contains(Edge(3, 2)));
  CHECK(m.lies_in(named::path(4)));
  CHECK_FALSE(m.lies_in(named::star(3)));
}

TEST_CASE("matching numbers of small graphs") {
  CHECK(matching_number(named::path(4)) == 2);
  CHECK(matching_number(named::cycle(7)) == 3);
  CHECK(matching_number(named::empty(5)) == 0);
  CHECK(matching_number(named::star(6)) == 1);
  CHECK(matching_number(generate_family({1, 1, 1}).graph.graph()) == 7);
  CHECK(max_matching(named::path(4)) == Matching({Edge(0, 1), Edge(2, 3)}));
}

TEST_CASE("brute-force matching") {
  CHECK(brute_force_max_matching(named::empty(3)).size() == 0);
  CHECK(brute_force_max_matching(named::complete(2)) == Matching({Edge(0, 1)}));
  CHECK_THROWS_AS(brute_force_max_matching(named::complete(8)), CapacityError);
  CHECK_THROWS_AS(count_maximum_matchings(named::complete(8)), CapacityError);
  CHECK(brute_force_max_matching(named::complete(7)).size() == 3);
}

TEST_CASE("counting maximum matchings") {
  CHECK(count_maximum_matchings(named::cycle(4)) == 2);
  CHECK(count_maximum_matchings(named::path(3)) == 2);
  CHECK(count_maximum_matchings(named::cycle(6)) == 2);
  CHECK(count_maximum_matchings(named::complete(4)) == 3);
  CHECK(count_maximum_matchings(named::empty(2)) == 1);
}

TEST_CASE("blossom agrees with brute force and subset search on every graph up to 8 vertices") {
  for (const Graph& g : testing::connected_up_to(8)) {
    const Matching m = max_matching(g);
    CHECK(m.lies_in(g));
    CHECK(static_cast<int>(m.size()) == oracle::matching_number(g));
    CHECK(matching_number(g) == static_cast<int>(m.size()));
    CHECK_FALSE(has_augmenting_path(g, m));
    if (g.size() <= kMatchingEnumerationCap) CHECK(brute_force_max_matching(g) == m);
  }
}

TEST_CASE("maximum matchings match subset enumeration") {
  for (const Graph& g : testing::connected_up_to(6)) {
    const auto expected = subset_maximum_matchings(g);
    const auto got = maximum_matchings(g);
    REQUIRE(got.size() == expected.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      CHECK(std::vector<Edge>(got[k].edges().begin(), got[k].edges().end()) == expected[k]);
    }
    CHECK(max_matching(g) == got.front());
  }
}

TEST_CASE("augmenting paths exist for non-maximum matchings") {
  const Graph p4 = named::path(4);
  CHECK(has_augmenting_path(p4, Matching({Edge(1, 2)})));
  CHECK(has_augmenting_path(named::cycle(5), Matching()));
  CHECK_FALSE(has_augmenting_path(named::cycle(5), Matching({Edge(0, 1), Edge(2, 3)})));
}

TEST_CASE("deleting a vertex lowers the matching number by at most one") {
  for (const Graph& g : testing::connected_up_to(7)) {
    const int m = matching_number(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      const std::vector<Vertex> gone{v};
      const int mv = matching_number(delete_vertices(g, gone).graph);
      CHECK(mv <= m);
      CHECK(mv >= m - 1);
    }
  }
}

TEST_CASE("pendant edges are in some maximum matching") {
  for (const Graph& g : testing::connected_up_to(7)) {
    const int m = matching_number(g);
    for (Vertex u : pendant_vertices(g)) {
      const Vertex v = g.neighbors(u)[0];
      const std::vector<Vertex> just_v{v};
      const std::vector<Vertex> both{u, v};
      CHECK(m == 1 + matching_number(delete_vertices(g, just_v).graph));
      CHECK(m == 1 + matching_number(delete_vertices(g, both).graph));
    }
  }
}

TEST_CASE("an even cycle joined by one edge adds half its length") {
  std::mt19937 rng(20241014);
  const auto hosts = testing::connected_up_to(6);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph& h = hosts[rng() % hosts.size()];
    const int q = 4 + 2 * static_cast<int>(rng() % 3);
    const Graph joined = disjoint_union(named::cycle(q), h);
    std::vector<Edge> es(joined.edges().begin(), joined.edges().end());
    const Vertex on_cycle = static_cast<Vertex>(rng() % static_cast<unsigned>(q));
    const Vertex in_h = q + static_cast<Vertex>(rng() % static_cast<unsigned>(h.order()));
    es.emplace_back(on_cycle, in_h);
    const Graph g(joined.order(), es);
    CHECK(matching_number(g) == q / 2 + matching_number(h));
  }
}

TEST_CASE("matching sets of a quadrangle with a pendant path") {
  // C4 on 0..3 and the path 0-4-5.
  const Graph g = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}});
  const MatchingSets ms = matching_sets(g);
  CHECK(ms.cycle_to_forest == std::vector<Edge>{Edge(0, 4)});

  const auto all = subset_maximum_matchings(g);
  std::uint64_t meeting = 0;
  for (const auto& m : all) meeting += std::find(m.begin(), m.end(), Edge(0, 4)) != m.end();
  CHECK(ms.maximum_matchings == all.size());
  CHECK(ms.meeting_e1 == meeting);
  CHECK(ms.avoiding_e1 == all.size() - meeting);
  CHECK(ms.maximum_matchings == ms.meeting_e1 + ms.avoiding_e1);
  CHECK(ms.forest_matchings == 1);
}

TEST_CASE("matching sets find the unique attaching edge") {
  // C6 on 0..5, pendant vertex 7 at distance 2 via 6.
  const Graph g = from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {6, 7}});
  CHECK(matching_sets(g).cycle_to_forest == std::vector<Edge>{Edge(0, 6)});
  CHECK_THROWS_AS(matching_sets(named::path(4)), InputError);
  CHECK_THROWS_AS(matching_sets(named::theta(1, 1, 1)), InputError);
  CHECK_THROWS_AS(matching_sets(disjoint_union(named::cycle(3), named::complete(2))), InputError);
}

TEST_CASE("even-cycle matching equivalence examples") {
  const Graph path2 = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}});
  auto s = even_cycle_matching_sides(path2);
  CHECK(s.lhs == s.rhs);

  s = even_cycle_matching_sides(named::cycle(6));
  CHECK(s.lhs);
  CHECK(s.rhs);

  const Graph pendant = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
  s = even_cycle_matching_sides(pendant);
  CHECK_FALSE(s.lhs);
  CHECK_FALSE(s.rhs);

  CHECK_THROWS_AS(even_cycle_matching_sides(named::cycle(5)), InputError);
}

TEST_CASE("odd-cycle matching equivalence examples") {
  auto s = odd_cycle_matching_sides(named::cycle(5));
  CHECK(s.lhs);
  CHECK(s.rhs);

  const Graph pendant = from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  s = odd_cycle_matching_sides(pendant);
  CHECK_FALSE(s.lhs);
  CHECK_FALSE(s.rhs);

  // C3, then 0-3, with the K2 4-5 hanging off 3.
  const Graph via = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
  s = odd_cycle_matching_sides(via);
  CHECK(s.lhs == s.rhs);

  CHECK_THROWS_AS(odd_cycle_matching_sides(named::cycle(4)), InputError);
}

TEST_CASE("tree-matching equivalences hold on every unicyclic graph up to 9 vertices") {
  for (const Graph& g : unicyclic_up_to(9)) {
    const auto q = disjoint_cycles(g)->front().length();
    const auto s = q % 2 == 0 ? even_cycle_matching_sides(g) : odd_cycle_matching_sides(g);
    CHECK(s.lhs == s.rhs);
  }
}

TEST_CASE("matching-set counts on even unicyclic graphs up to 9 vertices") {
  for (const Graph& g : unicyclic_up_to(9)) {
    const Cycle cyc = disjoint_cycles(g)->front();
    const MatchingSets ms = matching_sets(g);
    CHECK(ms.maximum_matchings == ms.meeting_e1 + ms.avoiding_e1);
    if (cyc.length() % 2 == 1) continue;
    if (ms.meeting_e1 == 0) CHECK(ms.maximum_matchings == 2 * ms.forest_matchings);
    const std::vector<Vertex> on(cyc.vertices().begin(), cyc.vertices().end());
    const int forest = matching_number(delete_vertices(g, on).graph);
    const bool split = matching_number(g) == static_cast<int>(cyc.length()) / 2 + forest;
    if (ms.meeting_e1 > 0 && split) CHECK(ms.maximum_matchings > 2 * ms.forest_matchings);
  }
}

TEST_CASE("a maximum matching through E1 need not outnumber twice the forest matchings") {
  // C4 with pendants at the adjacent cycle vertices 0 and 1.
  const Graph g = from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 5}});
  const MatchingSets ms = matching_sets(g);
  CHECK(ms.meeting_e1 == 1);
  CHECK(ms.maximum_matchings == 1);
  CHECK(ms.forest_matchings == 1);
}
