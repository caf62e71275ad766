#include "snlab/matching.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "snlab/errors.hpp"

namespace snlab {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  std::vector<Vertex> ends;
  for (const Edge& e : edges_) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) {
    throw InputError("matching edges are not vertex-disjoint");
  }
}

bool Matching::covers(Vertex v) const {
  return std::any_of(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); });
}

bool Matching::contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool Matching::lies_in(const Graph& g) const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return g.has_edge(e.u, e.v); });
}

namespace {

// Edmonds' blossom algorithm: grows alternating trees from each exposed
// vertex and shrinks odd cycles by base relabeling.
class Blossom {
 public:
  explicit Blossom(const Graph& g) : g_(g), n_(static_cast<std::size_t>(g.order())) {
    mate_.assign(n_, -1);
  }

  // Seeds with `initial` (must be a matching of g) and augments to maximum.
  std::vector<Vertex> solve(const std::vector<Vertex>& initial = {}) {
    if (!initial.empty()) mate_ = initial;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (mate_[idx(v)] != -1) continue;
      Vertex end = find_path(v);
      if (end == -1) continue;
      while (end != -1) {
        Vertex pv = parent_[idx(end)];
        Vertex ppv = mate_[idx(pv)];
        mate_[idx(end)] = pv;
        mate_[idx(pv)] = end;
        end = ppv;
      }
    }
    return mate_;
  }

  // Returns the end of an augmenting path from root, or -1.
  Vertex find_path(Vertex root) {
    used_.assign(n_, false);
    parent_.assign(n_, -1);
    base_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);
    used_[idx(root)] = true;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
        if (to == root || (mate_[idx(to)] != -1 && parent_[idx(mate_[idx(to)])] != -1)) {
          Vertex cur = lca(v, to);
          blossom_.assign(n_, false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (blossom_[idx(base_[i])]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(static_cast<Vertex>(i));
              }
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (mate_[idx(to)] == -1) return to;
          used_[idx(mate_[idx(to)])] = true;
          q.push(mate_[idx(to)]);
        }
      }
    }
    return -1;
  }

  const std::vector<Vertex>& mate() const { return mate_; }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[idx(a)];
      seen[idx(a)] = true;
      if (mate_[idx(a)] == -1) break;
      a = parent_[idx(mate_[idx(a)])];
    }
    while (true) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(mate_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      blossom_[idx(base_[idx(v)])] = blossom_[idx(base_[idx(mate_[idx(v)])])] = true;
      parent_[idx(v)] = child;
      child = mate_[idx(v)];
      v = parent_[idx(mate_[idx(v)])];
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> mate_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

int count_mated(const std::vector<Vertex>& mate) {
  int pairs = 0;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] > static_cast<Vertex>(v)) ++pairs;
  }
  return pairs;
}

void check_cap(const Graph& g) {
  if (g.size() > kMatchingEnumerationCap) {
    throw CapacityError("matching enumeration capped at " + std::to_string(kMatchingEnumerationCap) +
                        " edges, graph has " + std::to_string(g.size()));
  }
}

// Depth-first walk over all matchings, edges considered in index order.
// `visit` is called once per matching with its edge indices.
void for_each_matching(const Graph& g, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<bool> busy(static_cast<std::size_t>(g.order()), false);
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == g.size()) {
      visit(chosen);
      return;
    }
    const Edge& e = g.edge(i);
    auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    if (!busy[u] && !busy[v]) {
      busy[u] = busy[v] = true;
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
      busy[u] = busy[v] = false;
    }
    rec(i + 1);
  };
  rec(0);
}

Matching from_indices(const Graph& g, const std::vector<std::size_t>& idx) {
  std::vector<Edge> edges;
  for (std::size_t i : idx) edges.push_back(g.edge(i));
  return Matching(std::move(edges));
}

struct UnicyclicView {
  Cycle cycle;
  Relabeled<Graph> forest;  // G - V(C_q)
  ContractionTree contraction;
};

UnicyclicView unicyclic_view(const Graph& g) {
  if (!is_connected(g) || cycle_space_dim(g) != 1) throw InputError("graph is not connected unicyclic");
  auto cycles = disjoint_cycles(g);
  Cycle cycle = cycles->front();
  std::vector<Vertex> on(cycle.vertices().begin(), cycle.vertices().end());
  return {cycle, delete_vertices(g, on), contract_cycles(g)};
}

}  // namespace

int matching_number(const Graph& g) { return count_mated(Blossom(g).solve()); }

Matching max_matching(const Graph& g) {
  const int target = matching_number(g);
  // Greedy over sorted edges: keep e when a maximum matching still extends
  // the chosen prefix through e.
  std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
  std::vector<Edge> chosen;
  int remaining = target;
  for (const Edge& e : g.edges()) {
    if (remaining == 0) break;
    if (removed[static_cast<std::size_t>(e.u)] || removed[static_cast<std::size_t>(e.v)]) continue;
    std::vector<Vertex> gone;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (removed[static_cast<std::size_t>(v)] || v == e.u || v == e.v) gone.push_back(v);
    }
    if (matching_number(delete_vertices(g, gone).graph) == remaining - 1) {
      chosen.push_back(e);
      removed[static_cast<std::size_t>(e.u)] = removed[static_cast<std::size_t>(e.v)] = true;
      --remaining;
    }
  }
  return Matching(std::move(chosen));
}

bool has_augmenting_path(const Graph& g, const Matching& m) {
  std::vector<Vertex> mate(static_cast<std::size_t>(g.order()), -1);
  for (const Edge& e : m.edges()) {
    mate[static_cast<std::size_t>(e.u)] = e.v;
    mate[static_cast<std::size_t>(e.v)] = e.u;
  }
  Blossom b(g);
  b.solve(mate);
  return count_mated(b.mate()) > static_cast<int>(m.size());
}

Matching brute_force_max_matching(const Graph& g) {
  check_cap(g);
  std::vector<std::size_t> best;
  bool have = false;
  for_each_matching(g, [&](const std::vector<std::size_t>& m) {
    // Index order equals lexicographic edge order, so the first matching of
    // the largest size encountered in DFS order is the least one.
    if (!have || m.size() > best.size()) {
      best = m;
      have = true;
    }
  });
  return from_indices(g, best);
}

std::vector<Matching> maximum_matchings(const Graph& g) {
  check_cap(g);
  std::vector<std::vector<std::size_t>> all;
  std::size_t best = 0;
  for_each_matching(g, [&](const std::vector<std::size_t>& m) {
    if (m.size() > best) {
      best = m.size();
      all.clear();
    }
    if (m.size() == best) all.push_back(m);
  });
  std::vector<Matching> out;
  out.reserve(all.size());
  for (const auto& m : all) out.push_back(from_indices(g, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_maximum_matchings(const Graph& g) {
  check_cap(g);
  std::uint64_t count = 0;
  std::size_t best = 0;
  for_each_matching(g, [&](const std::vector<std::size_t>& m) {
    if (m.size() > best) {
      best = m.size();
      count = 0;
    }
    if (m.size() == best) ++count;
  });
  return count;
}

MatchingSets matching_sets(const Graph& g) {
  auto view = unicyclic_view(g);
  MatchingSets out;
  for (const Edge& e : g.edges()) {
    if (view.cycle.contains(e.u) != view.cycle.contains(e.v)) out.cycle_to_forest.push_back(e);
  }
  for (const Matching& m : maximum_matchings(g)) {
    ++out.maximum_matchings;
    bool meets = std::any_of(out.cycle_to_forest.begin(), out.cycle_to_forest.end(),
                             [&](const Edge& e) { return m.contains(e); });
    ++(meets ? out.meeting_e1 : out.avoiding_e1);
  }
  out.forest_matchings = count_maximum_matchings(view.forest.graph);
  return out;
}

EquivalenceSides even_cycle_matching_sides(const Graph& g) {
  auto view = unicyclic_view(g);
  const auto q = static_cast<int>(view.cycle.length());
  if (q % 2 != 0) throw InputError("cycle length is odd");
  const int m_tree = matching_number(view.contraction.tree);
  const int m_reduced = matching_number(view.contraction.reduced().graph);
  const int m_forest = matching_number(view.forest.graph);
  const auto sets = matching_sets(g);
  return {m_tree == m_reduced, matching_number(g) == q / 2 + m_forest && sets.meeting_e1 == 0};
}

EquivalenceSides odd_cycle_matching_sides(const Graph& g) {
  auto view = unicyclic_view(g);
  const auto q = static_cast<int>(view.cycle.length());
  if (q % 2 == 0) throw InputError("cycle length is even");
  const int m_tree = matching_number(view.contraction.tree);
  const int m_reduced = matching_number(view.contraction.reduced().graph);
  const int m_forest = matching_number(view.forest.graph);
  return {m_tree == m_reduced, matching_number(g) == m_forest + q / 2};
}

}  // namespace snlab
