#include "snlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stack>

#include "snlab/errors.hpp"

namespace snlab {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InputError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) {
      throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} out of range for order " + std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError("repeated edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const Edge key(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::has_edge(Vertex u, Vertex v) const { return edge_index(u, v).has_value(); }

SignedGraph::SignedGraph(Graph g) : graph_(std::move(g)), signs_(graph_.size(), Sign::Positive) {}

SignedGraph::SignedGraph(Graph g, std::vector<Sign> signs) : graph_(std::move(g)), signs_(std::move(signs)) {
  if (signs_.size() != graph_.size()) {
    throw InputError("sign map covers " + std::to_string(signs_.size()) + " edges, graph has " +
                     std::to_string(graph_.size()));
  }
}

SignedGraph::SignedGraph(int n, const std::vector<SignedEdge>& edges) {
  std::vector<Edge> plain;
  plain.reserve(edges.size());
  for (const auto& e : edges) plain.emplace_back(e.u, e.v);
  graph_ = Graph(n, std::move(plain));
  signs_.assign(graph_.size(), Sign::Positive);
  for (const auto& e : edges) signs_[*graph_.edge_index(e.u, e.v)] = e.sign;
}

Sign SignedGraph::sign(Vertex u, Vertex v) const {
  auto idx = graph_.edge_index(u, v);
  if (!idx) throw InputError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  return signs_[*idx];
}

std::size_t SignedGraph::negative_edge_count() const {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), Sign::Negative));
}

namespace {

// Builds the relabeling for a kept-vertex mask and the surviving edge indices.
template <class Fn>
Relabeled<Graph> relabel(const Graph& g, const std::vector<bool>& keep, Fn&& on_edge) {
  Relabeled<Graph> out;
  out.image.assign(static_cast<std::size_t>(g.order()), std::nullopt);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (keep[static_cast<std::size_t>(v)]) {
      out.image[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.original.size());
      out.original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    auto a = out.image[static_cast<std::size_t>(e.u)];
    auto b = out.image[static_cast<std::size_t>(e.v)];
    if (a && b) {
      edges.emplace_back(*a, *b);
      on_edge(i);
    }
  }
  out.graph = Graph(static_cast<int>(out.original.size()), std::move(edges));
  return out;
}

std::vector<bool> mask_of(const Graph& g, std::span<const Vertex> vs, bool value) {
  std::vector<bool> mask(static_cast<std::size_t>(g.order()), !value);
  for (Vertex v : vs) {
    if (v < 0 || v >= g.order()) {
      throw InputError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
    }
    mask[static_cast<std::size_t>(v)] = value;
  }
  return mask;
}

Relabeled<SignedGraph> relabel_signed(const SignedGraph& sg, const std::vector<bool>& keep) {
  std::vector<std::size_t> kept;
  auto plain = relabel(sg.graph(), keep, [&](std::size_t i) { kept.push_back(i); });
  // Relabeling is monotone, so the surviving edges stay in sorted order.
  std::vector<Sign> signs;
  signs.reserve(kept.size());
  for (std::size_t i : kept) signs.push_back(sg.sign(i));
  return {SignedGraph(std::move(plain.graph), std::move(signs)), std::move(plain.original), std::move(plain.image)};
}

}  // namespace

Relabeled<Graph> induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  return relabel(g, mask_of(g, keep, true), [](std::size_t) {});
}

Relabeled<SignedGraph> induced_subgraph(const SignedGraph& sg, std::span<const Vertex> keep) {
  return relabel_signed(sg, mask_of(sg.graph(), keep, true));
}

Relabeled<Graph> delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  return relabel(g, mask_of(g, removed, false), [](std::size_t) {});
}

Relabeled<SignedGraph> delete_vertices(const SignedGraph& sg, std::span<const Vertex> removed) {
  return relabel_signed(sg, mask_of(sg.graph(), removed, false));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), std::move(edges));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> parts;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> part;
    stack.push_back(s);
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

int component_count(const Graph& g) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int count = g.order();
  for (const Edge& e : g.edges()) {
    Vertex a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --count;
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

int cycle_space_dim(const Graph& g) {
  return static_cast<int>(g.size()) - g.order() + component_count(g);
}

std::vector<Block> blocks(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> edge_stack;
  std::vector<Block> out;
  int timer = 0;

  struct Frame {
    Vertex v;
    std::size_t parent_edge;  // SIZE_MAX at a root
    std::size_t next = 0;     // position in neighbour list
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  auto emit = [&](std::size_t until_edge) {
    Block b;
    while (true) {
      std::size_t e = edge_stack.back();
      edge_stack.pop_back();
      b.edges.push_back(e);
      b.vertices.push_back(g.edge(e).u);
      b.vertices.push_back(g.edge(e).v);
      if (e == until_edge) break;
    }
    std::sort(b.edges.begin(), b.edges.end());
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    out.push_back(std::move(b));
  };

  for (Vertex root = 0; root < g.order(); ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> stack{{root, kNone}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        std::size_t e = *g.edge_index(f.v, w);
        if (e == f.parent_edge) continue;
        auto wi = static_cast<std::size_t>(w);
        if (disc[wi] == -1) {
          edge_stack.push_back(e);
          disc[wi] = low[wi] = timer++;
          stack.push_back({w, e});
        } else if (disc[wi] < disc[static_cast<std::size_t>(f.v)]) {
          edge_stack.push_back(e);
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[wi]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          auto pv = static_cast<std::size_t>(stack.back().v);
          auto dv = static_cast<std::size_t>(done.v);
          low[pv] = std::min(low[pv], low[dv]);
          if (low[dv] >= disc[pv]) emit(done.parent_edge);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  return out;
}

Cycle::Cycle(std::vector<Vertex> cyclic_order) : vertices_(std::move(cyclic_order)) {
  if (vertices_.size() < 3) throw InputError("a cycle needs at least 3 vertices");
  auto sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("cycle repeats a vertex");
  }
  auto min_it = std::min_element(vertices_.begin(), vertices_.end());
  std::rotate(vertices_.begin(), min_it, vertices_.end());
  if (vertices_[1] > vertices_.back()) std::reverse(vertices_.begin() + 1, vertices_.end());
}

bool Cycle::contains(Vertex v) const { return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end(); }

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  return out;
}

bool Cycle::lies_in(const Graph& g) const {
  for (Vertex v : vertices_) {
    if (v < 0 || v >= g.order()) return false;
  }
  for (const Edge& e : edges()) {
    if (!g.has_edge(e.u, e.v)) return false;
  }
  return true;
}

std::vector<bool> vertices_on_cycles(const Graph& g) {
  std::vector<bool> on(static_cast<std::size_t>(g.order()), false);
  for (const Block& b : blocks(g)) {
    if (b.is_bridge()) continue;
    for (Vertex v : b.vertices) on[static_cast<std::size_t>(v)] = true;
  }
  return on;
}

namespace {

// Walks a block known to be a cycle into cyclic order.
Cycle cycle_of_block(const Graph& g, const Block& b) {
  std::vector<std::vector<Vertex>> local(static_cast<std::size_t>(g.order()));
  for (std::size_t e : b.edges) {
    local[static_cast<std::size_t>(g.edge(e).u)].push_back(g.edge(e).v);
    local[static_cast<std::size_t>(g.edge(e).v)].push_back(g.edge(e).u);
  }
  std::vector<Vertex> order{b.vertices.front()};
  Vertex prev = -1, cur = b.vertices.front();
  while (order.size() < b.vertices.size()) {
    const auto& nb = local[static_cast<std::size_t>(cur)];
    Vertex next = nb[0] != prev ? nb[0] : nb[1];
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return Cycle(std::move(order));
}

}  // namespace

std::optional<std::vector<Cycle>> disjoint_cycles(const Graph& g) {
  std::vector<Cycle> cycles;
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (const Block& b : blocks(g)) {
    if (b.is_bridge()) continue;
    if (!b.is_cycle()) return std::nullopt;
    for (Vertex v : b.vertices) {
      // Two cycle blocks meeting at a cut vertex share that vertex.
      if (used[static_cast<std::size_t>(v)]) return std::nullopt;
      used[static_cast<std::size_t>(v)] = true;
    }
    cycles.push_back(cycle_of_block(g, b));
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

ContractionTree contract_cycles(const Graph& g) {
  auto cycles = disjoint_cycles(g);
  if (!cycles) throw StructureError("cycles are not pairwise vertex-disjoint; T_G is undefined");

  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> cycle_of(n, -1);
  for (std::size_t c = 0; c < cycles->size(); ++c) {
    for (Vertex v : (*cycles)[c].vertices()) cycle_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }

  ContractionTree t;
  t.image.assign(n, -1);
  std::vector<Vertex> cycle_image(cycles->size(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    int c = cycle_of[static_cast<std::size_t>(v)];
    if (c < 0) {
      t.image[static_cast<std::size_t>(v)] = static_cast<Vertex>(t.origin.size());
      t.acyclic_vertices.push_back(static_cast<Vertex>(t.origin.size()));
      t.origin.emplace_back(v);
    } else {
      auto ci = static_cast<std::size_t>(c);
      if (cycle_image[ci] < 0) {
        cycle_image[ci] = static_cast<Vertex>(t.origin.size());
        t.cyclic_vertices.push_back(cycle_image[ci]);
        t.origin.emplace_back((*cycles)[ci]);
      }
      t.image[static_cast<std::size_t>(v)] = cycle_image[ci];
    }
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = t.image[static_cast<std::size_t>(e.u)], b = t.image[static_cast<std::size_t>(e.v)];
    if (a != b) edges.emplace_back(a, b);
  }
  t.tree = Graph(static_cast<int>(t.origin.size()), std::move(edges));
  return t;
}

Relabeled<Graph> ContractionTree::reduced() const { return delete_vertices(tree, cyclic_vertices); }

std::string to_string(PendantKind kind) { return kind == PendantKind::TypeI ? "I" : "II"; }

PendantKind pendant_type(const Graph& g, Vertex u) {
  if (u < 0 || u >= g.order()) throw InputError("vertex " + std::to_string(u) + " out of range");
  if (g.degree(u) != 1) throw InputError("vertex " + std::to_string(u) + " is not pendant");
  if (cycle_space_dim(g) == 0) throw InputError("pendant type needs a graph with a cycle");
  Vertex v = g.neighbors(u)[0];
  return vertices_on_cycles(g)[static_cast<std::size_t>(v)] ? PendantKind::TypeII : PendantKind::TypeI;
}

PendantKind pendant_type(const SignedGraph& sg, Vertex u) { return pendant_type(sg.graph(), u); }

std::vector<Vertex> pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n), parent(n);
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        auto wi = static_cast<std::size_t>(w);
        if (dist[wi] < 0) {
          dist[wi] = dist[static_cast<std::size_t>(v)] + 1;
          parent[wi] = v;
          q.push(w);
        } else if (parent[static_cast<std::size_t>(v)] != w) {
          int len = dist[static_cast<std::size_t>(v)] + dist[wi] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

namespace named {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, std::move(e));
}

Graph empty(int n) { return Graph(n); }

Graph theta(int a, int b, int c) {
  const int zeros = (a == 0) + (b == 0) + (c == 0);
  if (a < 0 || b < 0 || c < 0 || zeros > 1) throw InputError("theta graph needs at most one direct path");
  std::vector<Edge> e;
  int next = 2;
  for (int len : {a, b, c}) {
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, 1);
  }
  return Graph(next, std::move(e));
}

}  // namespace named

}  // namespace snlab
