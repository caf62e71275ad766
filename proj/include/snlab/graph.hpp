#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace snlab {

using Vertex = int;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const noexcept { return u == x || v == x; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// edges are kept sorted so edge indices are stable and canonical.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws InputError on self-loops, out-of-range endpoints or repeated edges.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  bool has_edge(Vertex u, Vertex v) const;
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

struct SignedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Sign sign = Sign::Positive;
};

// A graph together with a total sign map on its edge set. signs()[i] is the
// sign of graph().edge(i).
class SignedGraph {
 public:
  SignedGraph() = default;
  // All edges positive.
  explicit SignedGraph(Graph g);
  SignedGraph(Graph g, std::vector<Sign> signs);
  SignedGraph(int n, const std::vector<SignedEdge>& edges);

  const Graph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  std::size_t size() const noexcept { return graph_.size(); }
  std::span<const Sign> signs() const noexcept { return signs_; }
  Sign sign(std::size_t edge_index) const { return signs_[edge_index]; }
  // Throws InputError if uv is not an edge.
  Sign sign(Vertex u, Vertex v) const;
  std::size_t negative_edge_count() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  Graph graph_;
  std::vector<Sign> signs_;
};

// Result of a vertex-deleting operation. `original[k]` is the input vertex
// that became vertex k; `image[v]` is the new label of input vertex v, or
// empty if v was removed.
template <class G>
struct Relabeled {
  G graph;
  std::vector<Vertex> original;
  std::vector<std::optional<Vertex>> image;
};

Relabeled<Graph> induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Relabeled<SignedGraph> induced_subgraph(const SignedGraph& sg, std::span<const Vertex> keep);
Relabeled<Graph> delete_vertices(const Graph& g, std::span<const Vertex> removed);
Relabeled<SignedGraph> delete_vertices(const SignedGraph& sg, std::span<const Vertex> removed);

// Vertex-disjoint union; the vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Components as ascending vertex lists, ordered by their smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

// |E| - |V| + number of components.
int cycle_space_dim(const Graph& g);

struct Block {
  std::vector<Vertex> vertices;     // ascending
  std::vector<std::size_t> edges;   // ascending edge indices into the host graph

  bool is_bridge() const noexcept { return edges.size() == 1; }
  bool is_cycle() const noexcept { return vertices.size() >= 3 && edges.size() == vertices.size(); }
};

// Biconnected components. Every edge lies in exactly one block; isolated
// vertices belong to no block. Ordered by smallest edge index.
std::vector<Block> blocks(const Graph& g);

// A simple cycle in canonical rotation: smallest vertex first, followed by
// its smaller cycle-neighbour.
class Cycle {
 public:
  // Throws InputError for fewer than 3 or repeated vertices.
  explicit Cycle(std::vector<Vertex> cyclic_order);

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::size_t length() const noexcept { return vertices_.size(); }
  bool contains(Vertex v) const;
  // Consecutive pairs, closing edge last.
  std::vector<Edge> edges() const;
  bool lies_in(const Graph& g) const;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Per-vertex flag: does the vertex lie on some cycle.
std::vector<bool> vertices_on_cycles(const Graph& g);

// The cycles of g when they are pairwise vertex-disjoint (ordered by smallest
// vertex), otherwise empty optional. A forest yields an empty list.
std::optional<std::vector<Cycle>> disjoint_cycles(const Graph& g);

// Cycle contraction of a graph whose cycles are pairwise vertex-disjoint.
struct ContractionTree {
  // Either a cycle of the host (cyclic vertex) or a host vertex.
  using Origin = std::variant<Cycle, Vertex>;

  Graph tree;
  std::vector<Vertex> cyclic_vertices;   // W_G, ascending
  std::vector<Vertex> acyclic_vertices;  // U, ascending
  std::vector<Origin> origin;            // indexed by tree vertex
  std::vector<Vertex> image;             // host vertex -> tree vertex

  bool is_cyclic(Vertex t) const { return std::holds_alternative<Cycle>(origin[static_cast<std::size_t>(t)]); }
  // The tree with all cyclic vertices deleted.
  Relabeled<Graph> reduced() const;
};

// Throws StructureError if the cycles of g are not pairwise vertex-disjoint.
ContractionTree contract_cycles(const Graph& g);

enum class PendantKind { TypeI, TypeII };

std::string to_string(PendantKind kind);

// Throws InputError if u is not a pendant vertex or g is acyclic.
PendantKind pendant_type(const Graph& g, Vertex u);
PendantKind pendant_type(const SignedGraph& sg, Vertex u);

std::vector<Vertex> pendant_vertices(const Graph& g);

// Length of a shortest cycle; empty for forests.
std::optional<int> girth(const Graph& g);

// Small named graphs used throughout tests and generators.
namespace named {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph empty(int n);
// Two vertices joined by three internally disjoint paths with a, b, c inner vertices.
Graph theta(int a, int b, int c);
}  // namespace named

}  // namespace snlab
