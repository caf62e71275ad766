#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "snlab/balance.hpp"
#include "snlab/errors.hpp"
#include "snlab/formats.hpp"
#include "snlab/linalg.hpp"
#include "snlab/matching.hpp"
#include "snlab/theorems.hpp"
#include "support.hpp"

using namespace snlab;
using testing::sgl;
using testing::signed_cycle;

namespace {

InvariantRecord record_of(int n, int m, int c, int eta, bool balanced) {
  return {n, m, c, eta, balanced, n - 2 * m - c, n - 2 * m + 2 * c, n - 2 * m + 2 * c - eta};
}

// Slack recomputed without the library's record code.
int slack(const SignedGraph& sg) {
  const Graph& g = sg.graph();
  const int c = static_cast<int>(g.size()) - g.order() + component_count(g);
  return g.order() - 2 * matching_number(g) + 2 * c - oracle::nullity(sg);
}

SignedGraph c4_with_pendant(int negative_edges) {
  std::vector<SignedEdge> es;
  for (int i = 0; i < 4; ++i) es.push_back({i, (i + 1) % 4, i < negative_edges ? Sign::Negative : Sign::Positive});
  es.push_back({0, 4, Sign::Positive});
  return SignedGraph(5, es);
}

}  // namespace

TEST_CASE("invariant record examples") {
  CHECK(invariant_record(signed_cycle(6, 1)) == record_of(6, 3, 1, 2, false));
  CHECK(invariant_record(SignedGraph(named::path(4))) == record_of(4, 2, 0, 0, true));
  const InvariantRecord c4 = invariant_record(SignedGraph(named::cycle(4)));
  CHECK(c4.eta == 2);
  CHECK(c4.s == 0);
  CHECK(c4.balanced);
  CHECK(c4.within_bounds());
  CHECK(compute_invariants(signed_cycle(5, 1), 2, 1) == compute_invariants(signed_cycle(5, 1)));
  CHECK(invariant_record(SignedGraph(named::empty(3))) == record_of(3, 0, 0, 3, true));
}

TEST_CASE("theorem violations carry the counterexample") {
  const TheoremViolation v("bounds", record_of(3, 1, 0, 5, true), "3\n0 1 +\n");
  CHECK(v.record().eta == 5);
  CHECK_FALSE(v.record().within_bounds());
  CHECK(v.sgl() == "3\n0 1 +\n");
}

TEST_CASE("cycle nullities") {
  for (int p = 3; p <= 12; ++p) {
    for (int neg : {0, 1}) {
      CAPTURE(p);
      CAPTURE(neg);
      const int eta = nullity(signed_cycle(p, neg));
      int expected = 0;
      if (p % 4 == 0 && neg == 0) expected = 2;
      if (p % 4 == 2 && neg == 1) expected = 2;
      CHECK(eta == expected);
      CHECK(eta == oracle::nullity(signed_cycle(p, neg)));
    }
  }
}

TEST_CASE("upper bound predicate examples") {
  const SignedGraph c4(named::cycle(4));
  CHECK(attains_upper(c4));
  CHECK(invariant_record(c4).eta == invariant_record(c4).upper);

  const SignedGraph c6(named::cycle(6));
  const auto cond = upper_bound_conditions(c6);
  CHECK(cond.cycles_disjoint);
  CHECK_FALSE(cond.cycle_signs_ok);
  CHECK(cond.tree_matching_ok);
  CHECK(invariant_record(c6).eta < invariant_record(c6).upper);
  CHECK(attains_upper(signed_cycle(6, 1)));

  for (const SignedGraph& sg : enumerate_signatures(named::theta(1, 1, 1))) {
    CHECK_FALSE(upper_bound_conditions(sg).cycles_disjoint);
    CHECK_FALSE(attains_upper(sg));
    CHECK(invariant_record(sg).s > 0);
  }
  CHECK(attains_upper(SignedGraph(named::path(4))));
  CHECK(attains_upper(SignedGraph(named::path(3))));
  CHECK_THROWS_AS(attains_upper(SignedGraph(named::empty(2))), InputError);
  CHECK_THROWS_AS(UpperBoundPredicate(named::empty(2)), InputError);
}

TEST_CASE("the upper bound is attained exactly when the three conditions hold") {
  std::size_t graphs = 0, attained = 0;
  for (const Graph& g : testing::connected_up_to(7)) {
    const UpperBoundPredicate pred(g);
    const int m = matching_number(g);
    const int c = cycle_space_dim(g);
    const CotreeSignatures sigs(g);
    for (std::uint64_t k = 0; k < sigs.count(); ++k) {
      const SignedGraph sg = sigs.at(k);
      const InvariantRecord r = compute_invariants(sg, m, c);
      const bool holds = pred.evaluate(sg).holds();
      REQUIRE(holds == (r.eta == r.upper));
      CHECK(upper_bound_conditions(sg).holds() == holds);
      ++graphs;
      attained += holds;
    }
  }
  CHECK(graphs > 100000);
  CHECK(attained > 0);
}

TEST_CASE("unicyclic classification examples") {
  const UnicyclicClass c6 = classify_unicyclic(signed_cycle(6, 1));
  CHECK(c6.case_number == 2);
  CHECK(c6.offset == 2);
  CHECK(c6.q == 6);
  CHECK(c6.predicted_eta(6, 3) == 2);

  const UnicyclicClass c5 = classify_unicyclic(signed_cycle(5, 1));
  CHECK(c5.case_number == 1);
  CHECK(c5.offset == -1);
  CHECK(c5.predicted_eta(5, 2) == nullity(signed_cycle(5, 1)));

  const SignedGraph pend = c4_with_pendant(1);
  const UnicyclicClass p4 = classify_unicyclic(pend);
  CHECK(p4.case_number == 3);
  CHECK(p4.offset == 0);
  CHECK(p4.predicted_eta(5, 2) == oracle::nullity(pend));

  CHECK_THROWS_AS(classify_unicyclic(SignedGraph(named::cycle(4))), InputError);
  CHECK_THROWS_AS(classify_unicyclic(SignedGraph(named::path(4))), InputError);
  CHECK_THROWS_AS(classify_unicyclic(enumerate_signatures(named::theta(1, 1, 1)).back()), InputError);
  const Graph split = disjoint_union(named::cycle(3), named::complete(2));
  std::vector<Sign> s(split.size(), Sign::Positive);
  s[0] = Sign::Negative;
  CHECK_THROWS_AS(classify_unicyclic(SignedGraph(split, s)), InputError);
}

TEST_CASE("the unicyclic trichotomy predicts the nullity for every unbalanced unicyclic graph up to 9 vertices") {
  GraphFilter f;
  f.unicyclic_only = true;
  std::set<int> cases;
  std::size_t count = 0;
  for (const Graph& g : testing::connected_up_to(9, f)) {
    const SignedGraph sg = CotreeSignatures(g).at(1);
    REQUIRE_FALSE(is_balanced(sg).balanced);
    const UnicyclicClass k = classify_unicyclic(sg);
    const int m = matching_number(g);
    CHECK(k.predicted_eta(g.order(), m) == nullity(sg));
    cases.insert(k.case_number);
    ++count;
  }
  CHECK(count == 1 + 2 + 5 + 13 + 33 + 89 + 240);
  CHECK(cases == std::set<int>{1, 2, 3});
}

TEST_CASE("extremal family examples") {
  const FamilyGraph a = generate_family({1, 0, 0});
  CHECK(a.predicted == FamilyPrediction{5, 2, 1, 0, 3});
  const FamilyGraph b = generate_family({0, 1, 0});
  CHECK(b.predicted == FamilyPrediction{8, 4, 1, 2, 0});
  const FamilyGraph c = generate_family({1, 1, 1});
  CHECK(c.predicted == FamilyPrediction{16, 7, 3, 3, 5});
  const InvariantRecord r = invariant_record(c.graph);
  CHECK(r.n == 16);
  CHECK(r.m == 7);
  CHECK(r.c == 3);
  CHECK(r.eta == 3);
  CHECK(r.s == 5);
  CHECK(c.graph.graph().degree(c.x) == 4);
  CHECK(c.graph.graph().degree(c.y0) == 1);
  CHECK(c.graph.negative_edge_count() == 1);
  CHECK_FALSE(is_balanced(c.graph).balanced);
  CHECK_THROWS_AS(generate_family({0, 0, 0}), InputError);
  CHECK_THROWS_AS(generate_family({-1, 1, 0}), InputError);
}

TEST_CASE("family predictions match computed invariants for every parameter triple with c up to 4") {
  for (int l1 = 0; l1 <= 4; ++l1) {
    for (int l2 = 0; l1 + l2 <= 4; ++l2) {
      for (int l3 = 0; l1 + l2 + l3 <= 4; ++l3) {
        if (l1 + l2 + l3 == 0) continue;
        CAPTURE(l1);
        CAPTURE(l2);
        CAPTURE(l3);
        const FamilyParams p{l1, l2, l3};
        const FamilyGraph fam = generate_family(p);
        const Graph& g = fam.graph.graph();
        CHECK(is_connected(g));
        CHECK(fam.predicted == predict_family(p));
        CHECK(fam.predicted.n == 3 * l1 + 6 * l2 + 5 * l3 + 2);
        CHECK(fam.predicted.m == l1 + 3 * l2 + 2 * l3 + 1);
        CHECK(fam.predicted.c == l1 + l2 + l3);
        CHECK(fam.predicted.eta == 2 * l2 + l3);
        CHECK(fam.predicted.s == 3 * l1 + 2 * l3);
        const InvariantRecord r = invariant_record(fam.graph);
        CHECK(FamilyPrediction{r.n, r.m, r.c, r.eta, r.s} == fam.predicted);
        CHECK(r.m == static_cast<int>(max_matching(g).size()));
        if (g.order() <= 16) CHECK(r.eta == oracle::nullity(fam.graph));
        CHECK(is_balanced(fam.graph).balanced == (l2 == 0));
        const auto cycles = disjoint_cycles(g);
        REQUIRE(cycles);
        CHECK(static_cast<int>(cycles->size()) == p.c());
      }
    }
  }
}

TEST_CASE("slack coverage") {
  const auto one = slack_coverage(1);
  CHECK(one == std::map<int, FamilyParams>{{0, {0, 1, 0}}, {2, {0, 0, 1}}, {3, {1, 0, 0}}});
  const auto two = slack_coverage(2);
  CHECK(two.at(5) == FamilyParams{1, 0, 1});
  CHECK_FALSE(two.contains(1));
  CHECK_THROWS_AS(slack_coverage(0), InputError);
  for (int c = 1; c <= 20; ++c) {
    const auto cov = slack_coverage(c);
    CHECK(cov.size() == static_cast<std::size_t>(3 * c));
    for (int s = 0; s <= 3 * c; ++s) {
      if (s == 1) {
        CHECK_FALSE(cov.contains(1));
        continue;
      }
      REQUIRE(cov.contains(s));
      const FamilyParams& p = cov.at(s);
      CHECK(p.l1 >= 0);
      CHECK(p.l2 >= 0);
      CHECK(p.l3 >= 0);
      CHECK(p.c() == c);
      CHECK(3 * p.l1 + 2 * p.l3 == s);
    }
  }
}

TEST_CASE("pendant reduction examples") {
  const PendantReduction p4 = pendant_reduction(SignedGraph(named::path(4)));
  CHECK(p4.reduced.order() == 0);
  REQUIRE(p4.steps.size() == 2);
  CHECK(p4.eta_before == 0);
  for (const auto& s : p4.steps) {
    CHECK(s.eta_after == 0);
    CHECK_FALSE(s.kind);
  }
  CHECK(p4.steps[0].pendant == 0);
  CHECK(p4.steps[0].quasi_pendant == 1);
  CHECK(p4.steps[1].pendant == 2);

  const PendantReduction star = pendant_reduction(SignedGraph(named::star(3)));
  REQUIRE(star.steps.size() == 1);
  CHECK(star.reduced.order() == 2);
  CHECK(star.reduced.size() == 0);
  CHECK(star.eta_before == 2);
  CHECK(star.steps[0].eta_after == 2);

  const FamilyGraph fam = generate_family({1, 0, 0});
  const PendantReduction r = pendant_reduction(fam.graph);
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].pendant == fam.y0);
  CHECK(r.steps[0].quasi_pendant == fam.x);
  CHECK(r.steps[0].kind == PendantKind::TypeI);
  CHECK(r.reduced == SignedGraph(named::cycle(3)));
  CHECK(r.steps[0].eta_after == fam.predicted.eta);

  // Type I pendants go first even when a Type II pendant has a smaller label.
  const SignedGraph mixed = sgl("7\n0 1 +\n1 2 +\n0 2 +\n0 3 +\n2 4 +\n4 5 +\n5 6 +\n");
  const PendantReduction m = pendant_reduction(mixed);
  REQUIRE_FALSE(m.steps.empty());
  CHECK(m.steps[0].pendant == 6);
  CHECK(m.steps[0].kind == PendantKind::TypeI);
}

TEST_CASE("pendant reduction preserves the nullity at every step") {
  for (const SignedGraph& sg : testing::signed_up_to(7)) {
    if (pendant_vertices(sg.graph()).empty()) continue;
    const PendantReduction r = pendant_reduction(sg);
    CHECK(r.eta_before == nullity(sg));
    SignedGraph replay = sg;
    std::vector<Vertex> label(static_cast<std::size_t>(sg.order()));
    for (Vertex v = 0; v < sg.order(); ++v) label[static_cast<std::size_t>(v)] = v;
    for (const ReductionStep& step : r.steps) {
      CHECK(step.eta_after == r.eta_before);
      std::vector<Vertex> gone;
      for (Vertex v = 0; v < replay.order(); ++v) {
        const Vertex orig = label[static_cast<std::size_t>(v)];
        if (orig == step.pendant || orig == step.quasi_pendant) gone.push_back(v);
      }
      REQUIRE(gone.size() == 2);
      auto next = delete_vertices(replay, gone);
      std::vector<Vertex> relabel;
      for (Vertex k : next.original) relabel.push_back(label[static_cast<std::size_t>(k)]);
      label = std::move(relabel);
      replay = std::move(next.graph);
      CHECK(oracle::nullity(replay) == step.eta_after);
    }
    CHECK(replay == r.reduced);
    CHECK(label == r.original);
    CHECK(pendant_vertices(r.reduced.graph()).empty());
  }
}

TEST_CASE("pendant vertices of both kinds preserve or force the slack") {
  std::size_t type1 = 0, type2 = 0;
  for (const SignedGraph& sg : testing::signed_up_to(7)) {
    const Graph& g = sg.graph();
    if (cycle_space_dim(g) == 0) continue;
    const InvariantRecord r = compute_invariants(sg);
    for (Vertex u : pendant_vertices(g)) {
      const Vertex v = g.neighbors(u)[0];
      if (pendant_type(g, u) == PendantKind::TypeII) {
        CHECK(r.s >= 2);
        ++type2;
      } else {
        const std::vector<Vertex> gone{u, v};
        const SignedGraph rest = delete_vertices(sg, gone).graph;
        CHECK(compute_invariants(rest).s == r.s);
        ++type1;
      }
    }
  }
  CHECK(type1 > 0);
  CHECK(type2 > 0);
}

TEST_CASE("no signed graph up to 7 vertices has slack one") {
  std::set<int> seen;
  for (const SignedGraph& sg : testing::signed_up_to(7)) {
    const InvariantRecord r = invariant_record(sg);
    REQUIRE(r.within_bounds());
    REQUIRE(r.s != 1);
    seen.insert(r.s);
  }
  CHECK_FALSE(seen.contains(1));
  CHECK(seen.contains(0));
  CHECK(seen.contains(2));
  CHECK(seen.contains(3));
}

TEST_CASE("slack agrees with an independent recomputation up to 6 vertices") {
  for (const SignedGraph& sg : testing::signed_up_to(6)) CHECK(compute_invariants(sg).s == slack(sg));
}
