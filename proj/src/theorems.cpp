#include "snlab/theorems.hpp"

#include <algorithm>

#include "snlab/balance.hpp"
#include "snlab/errors.hpp"
#include "snlab/formats.hpp"
#include "snlab/linalg.hpp"
#include "snlab/matching.hpp"

namespace snlab {

InvariantRecord compute_invariants(const SignedGraph& sg, int matching, int cycle_dim) {
  InvariantRecord r;
  r.n = sg.order();
  r.m = matching;
  r.c = cycle_dim;
  r.eta = nullity(sg);
  r.balanced = is_balanced(sg).balanced;
  r.lower = r.n - 2 * r.m - r.c;
  r.upper = r.n - 2 * r.m + 2 * r.c;
  r.s = r.upper - r.eta;
  return r;
}

InvariantRecord compute_invariants(const SignedGraph& sg) {
  return compute_invariants(sg, matching_number(sg.graph()), cycle_space_dim(sg.graph()));
}

InvariantRecord invariant_record(const SignedGraph& sg) {
  InvariantRecord r = compute_invariants(sg);
  if (!r.within_bounds()) {
    throw TheoremViolation("nullity " + std::to_string(r.eta) + " outside [" + std::to_string(r.lower) + ", " +
                               std::to_string(r.upper) + "]",
                           r, to_sgl(sg));
  }
  return r;
}

namespace {

bool tree_matching_equal(const Graph& g) {
  const ContractionTree t = contract_cycles(g);
  return matching_number(t.tree) == matching_number(t.reduced().graph);
}

}  // namespace

UpperBoundPredicate::UpperBoundPredicate(const Graph& g) : cycles_(disjoint_cycles(g)) {
  if (!is_connected(g)) throw InputError("not connected");
  if (cycles_) tree_matching_ok_ = tree_matching_equal(g);
}

UpperBoundConditions UpperBoundPredicate::evaluate(const SignedGraph& sg) const {
  UpperBoundConditions out;
  if (!cycles_) return out;
  out.cycles_disjoint = true;
  out.tree_matching_ok = tree_matching_ok_;
  out.cycle_signs_ok = std::all_of(cycles_->begin(), cycles_->end(), [&](const Cycle& c) {
    const auto q = c.length();
    const Sign s = cycle_sign(sg, c);
    return (q % 4 == 0 && s == Sign::Positive) || (q % 4 == 2 && s == Sign::Negative);
  });
  return out;
}

UpperBoundConditions upper_bound_conditions(const SignedGraph& sg) {
  return UpperBoundPredicate(sg.graph()).evaluate(sg);
}

bool attains_upper(const SignedGraph& sg) { return upper_bound_conditions(sg).holds(); }

UnicyclicClass classify_unicyclic(const SignedGraph& sg) {
  const Graph& g = sg.graph();
  if (!is_connected(g)) throw InputError("not connected");
  if (cycle_space_dim(g) != 1) throw InputError("not unicyclic");
  if (is_balanced(sg).balanced) throw InputError("not unbalanced");
  const auto cycles = disjoint_cycles(g);
  UnicyclicClass out;
  out.q = static_cast<int>(cycles->front().length());
  out.tree_matching_equal = tree_matching_equal(g);
  if (out.tree_matching_equal && out.q % 2 == 1) {
    out.case_number = 1;
    out.offset = -1;
  } else if (out.tree_matching_equal && out.q % 4 == 2) {
    out.case_number = 2;
    out.offset = 2;
  }
  return out;
}

FamilyPrediction predict_family(const FamilyParams& p) {
  return {3 * p.l1 + 6 * p.l2 + 5 * p.l3 + 2, p.l1 + 3 * p.l2 + 2 * p.l3 + 1, p.c(), 2 * p.l2 + p.l3,
          3 * p.l1 + 2 * p.l3};
}

FamilyGraph generate_family(const FamilyParams& p) {
  if (p.l1 < 0 || p.l2 < 0 || p.l3 < 0) throw InputError("family parameters must be nonnegative");
  if (p.c() < 1) throw InputError("family needs l1 + l2 + l3 >= 1");

  std::vector<SignedEdge> edges{{0, 1, Sign::Positive}};
  int next = 2;
  auto add_cycle = [&](int q, bool one_negative) {
    const int base = next;
    for (int i = 0; i < q; ++i) {
      const bool closing = i == q - 1;
      edges.push_back({base + i, base + (i + 1) % q, closing && one_negative ? Sign::Negative : Sign::Positive});
    }
    next += q;
    return base;
  };
  for (int i = 0; i < p.l1; ++i) edges.push_back({0, add_cycle(3, false), Sign::Positive});
  for (int i = 0; i < p.l2; ++i) edges.push_back({0, add_cycle(6, true), Sign::Positive});
  for (int i = 0; i < p.l3; ++i) {
    const int attach = add_cycle(4, false);
    const int leaf = next++;
    edges.push_back({attach, leaf, Sign::Positive});
    edges.push_back({0, leaf, Sign::Positive});
  }
  return {SignedGraph(next, edges), predict_family(p), 0, 1};
}

std::map<int, FamilyParams> slack_coverage(int c) {
  if (c < 1) throw InputError("slack coverage needs c >= 1");
  std::map<int, FamilyParams> out;
  for (int l1 = 0; l1 <= c; ++l1) {
    for (int l3 = 0; l1 + l3 <= c; ++l3) {
      const int s = 3 * l1 + 2 * l3;
      out.try_emplace(s, FamilyParams{l1, c - l1 - l3, l3});
    }
  }
  return out;
}

PendantReduction pendant_reduction(const SignedGraph& sg) {
  PendantReduction out;
  out.reduced = sg;
  out.original.resize(static_cast<std::size_t>(sg.order()));
  for (Vertex v = 0; v < sg.order(); ++v) out.original[static_cast<std::size_t>(v)] = v;
  out.eta_before = nullity(sg);

  for (;;) {
    const Graph& g = out.reduced.graph();
    const auto pendants = pendant_vertices(g);
    if (pendants.empty()) break;
    std::optional<Vertex> pick;
    std::optional<PendantKind> kind;
    if (cycle_space_dim(g) == 0) {
      pick = pendants.front();
    } else {
      const auto on_cycle = vertices_on_cycles(g);
      for (PendantKind want : {PendantKind::TypeI, PendantKind::TypeII}) {
        for (Vertex u : pendants) {
          const bool type2 = on_cycle[static_cast<std::size_t>(g.neighbors(u)[0])];
          if (type2 == (want == PendantKind::TypeII)) {
            pick = u;
            kind = want;
            break;
          }
        }
        if (pick) break;
      }
    }
    const Vertex u = *pick;
    const Vertex v = g.neighbors(u)[0];
    const std::vector<Vertex> gone{u, v};
    auto next = delete_vertices(out.reduced, gone);
    ReductionStep step;
    step.pendant = out.original[static_cast<std::size_t>(u)];
    step.quasi_pendant = out.original[static_cast<std::size_t>(v)];
    step.kind = kind;
    std::vector<Vertex> original;
    for (Vertex k : next.original) original.push_back(out.original[static_cast<std::size_t>(k)]);
    out.original = std::move(original);
    out.reduced = std::move(next.graph);
    step.eta_after = nullity(out.reduced);
    out.steps.push_back(step);
  }
  return out;
}

}  // namespace snlab
