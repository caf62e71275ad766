#include "snlab/balance.hpp"

#include <algorithm>
#include <queue>

#include "snlab/errors.hpp"

namespace snlab {

Sign cycle_sign(const SignedGraph& sg, const Cycle& c) {
  if (!c.lies_in(sg.graph())) throw InputError("not a cycle of the signed graph");
  Sign s = Sign::Positive;
  for (const Edge& e : c.edges()) s = s * sg.sign(e.u, e.v);
  return s;
}

SpanningForest canonical_forest(const Graph& g) {
  SpanningForest f;
  const auto n = static_cast<std::size_t>(g.order());
  f.parent.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<bool> in_tree(g.size(), false);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = true;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        f.parent[static_cast<std::size_t>(w)] = v;
        in_tree[*g.edge_index(v, w)] = true;
        q.push(w);
      }
    }
  }
  for (std::size_t e = 0; e < g.size(); ++e) (in_tree[e] ? f.tree_edges : f.cotree_edges).push_back(e);
  return f;
}

std::vector<Vertex> SwitchingCertificate::switching_set() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    if (assignment[v] == Sign::Negative) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

namespace {

// Vertex potentials along the canonical forest: root +, child = parent * sigma.
std::vector<Sign> potentials(const SignedGraph& sg, const SpanningForest& f) {
  const auto n = static_cast<std::size_t>(sg.order());
  std::vector<Sign> pot(n, Sign::Positive);
  std::vector<bool> done(n, false);
  // Parents are discovered before children in BFS order; resolve lazily.
  std::vector<Vertex> chain;
  for (Vertex v = 0; v < sg.order(); ++v) {
    Vertex x = v;
    while (!done[static_cast<std::size_t>(x)] && f.parent[static_cast<std::size_t>(x)] != -1) {
      chain.push_back(x);
      x = f.parent[static_cast<std::size_t>(x)];
    }
    done[static_cast<std::size_t>(x)] = true;
    while (!chain.empty()) {
      Vertex c = chain.back();
      chain.pop_back();
      Vertex p = f.parent[static_cast<std::size_t>(c)];
      pot[static_cast<std::size_t>(c)] = pot[static_cast<std::size_t>(p)] * sg.sign(p, c);
      done[static_cast<std::size_t>(c)] = true;
    }
  }
  return pot;
}

std::vector<Vertex> path_to_root(const SpanningForest& f, Vertex v) {
  std::vector<Vertex> out{v};
  while (f.parent[static_cast<std::size_t>(out.back())] != -1) out.push_back(f.parent[static_cast<std::size_t>(out.back())]);
  return out;
}

// Fundamental cycle of a cotree edge uv: tree path u..v closed by uv.
Cycle fundamental_cycle(const SpanningForest& f, const Edge& e) {
  auto pu = path_to_root(f, e.u);
  auto pv = path_to_root(f, e.v);
  while (pu.size() > 1 && pv.size() > 1 && pu[pu.size() - 2] == pv[pv.size() - 2]) {
    pu.pop_back();
    pv.pop_back();
  }
  // pu.back() == pv.back() is the meeting vertex.
  std::vector<Vertex> order(pu.begin(), pu.end());
  for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it) order.push_back(*it);
  return Cycle(std::move(order));
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& sg) {
  const auto forest = canonical_forest(sg.graph());
  const auto pot = potentials(sg, forest);
  BalanceResult r;
  for (std::size_t e : forest.cotree_edges) {
    const Edge& edge = sg.graph().edge(e);
    if (pot[static_cast<std::size_t>(edge.u)] * sg.sign(e) * pot[static_cast<std::size_t>(edge.v)] == Sign::Negative) {
      r.negative_cycle = fundamental_cycle(forest, edge);
      if (cycle_sign(sg, *r.negative_cycle) != Sign::Negative) throw StructureError("negative cycle witness failed");
      return r;
    }
  }
  SwitchingCertificate cert{pot};
  if (switch_signs(sg, cert.switching_set()).negative_edge_count() != 0) {
    throw StructureError("switching certificate failed");
  }
  r.balanced = true;
  r.certificate = std::move(cert);
  return r;
}

SignedGraph switch_signs(const SignedGraph& sg, std::span<const Vertex> side) {
  std::vector<bool> in(static_cast<std::size_t>(sg.order()), false);
  for (Vertex v : side) {
    if (v < 0 || v >= sg.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Sign> signs(sg.signs().begin(), sg.signs().end());
  for (std::size_t e = 0; e < sg.size(); ++e) {
    const Edge& edge = sg.graph().edge(e);
    if (in[static_cast<std::size_t>(edge.u)] != in[static_cast<std::size_t>(edge.v)]) signs[e] = -signs[e];
  }
  return SignedGraph(sg.graph(), std::move(signs));
}

SignedGraph canonical_signature(const SignedGraph& sg) {
  const auto forest = canonical_forest(sg.graph());
  const auto pot = potentials(sg, forest);
  std::vector<Sign> signs(sg.size());
  for (std::size_t e = 0; e < sg.size(); ++e) {
    const Edge& edge = sg.graph().edge(e);
    signs[e] = pot[static_cast<std::size_t>(edge.u)] * sg.sign(e) * pot[static_cast<std::size_t>(edge.v)];
  }
  return SignedGraph(sg.graph(), std::move(signs));
}

}  // namespace snlab
