#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "snlab/graph.hpp"

namespace snlab {

// Upper-triangle adjacency bits in column order ((0,1),(0,2),(1,2),(0,3),...),
// first pair in the most significant position, minimised over all vertex
// orders that respect an isomorphism-invariant refinement of the degree
// partition. Two graphs are isomorphic iff their codes (and orders) agree.
inline constexpr int kCanonicalOrderCap = 11;

std::uint64_t canonical_code(const Graph& g);
// The graph whose column-order code is `code` under the identity labelling.
Graph decode_code(int n, std::uint64_t code);
// Relabels g into its canonical form.
Graph canonical_form(const Graph& g);

struct GraphFilter {
  std::optional<int> max_c;
  bool unicyclic_only = false;
  std::optional<int> min_girth;

  bool accepts(const Graph& g) const;
};

// Internal generation caps. General connected graphs are generated by vertex
// augmentation; trees and unicyclic graphs by leaf addition, which reaches
// further.
struct EnumerationCapacity {
  int general = 8;
  int sparse = 10;

  static EnumerationCapacity defaults() { return {}; }
  // SNLAB_CAPACITY_OVERRIDE set: lift both caps to kCanonicalOrderCap.
  static EnumerationCapacity from_environment();
};

// Single-consumer stream of underlying graphs in a fixed order.
class GraphStream {
 public:
  static GraphStream from_list(std::vector<Graph> graphs);
  // Lazily parses graph6 lines; `source` names the input in parse errors.
  static GraphStream from_graph6(std::unique_ptr<std::istream> in, std::string source);
  static GraphStream open_graph6(const std::string& path);

  std::optional<Graph> next();
  std::vector<Graph> collect();

 private:
  std::vector<Graph> list_;
  std::size_t cursor_ = 0;
  std::unique_ptr<std::istream> in_;
  std::string source_;
  std::size_t line_ = 0;
};

// Every connected simple graph on n vertices exactly once up to isomorphism,
// canonically labelled, in ascending canonical code order, filtered.
// Throws CapacityError when n exceeds the applicable cap.
std::vector<Graph> connected_graphs(int n, const GraphFilter& filter = {},
                                    const EnumerationCapacity& cap = EnumerationCapacity::defaults());
GraphStream enumerate_connected(int n, const GraphFilter& filter = {},
                                const EnumerationCapacity& cap = EnumerationCapacity::defaults());

// Signature representatives per switching class: tree edges of the canonical
// spanning forest positive, cotree edges running through all 2^c patterns.
// Pattern 0 (all positive) comes first; bit k of a pattern negates the k-th
// cotree edge in ascending edge order.
class CotreeSignatures {
 public:
  static constexpr int kMaxCotreeEdges = 30;

  // Throws CapacityError when c(g) > kMaxCotreeEdges.
  explicit CotreeSignatures(Graph g);

  std::uint64_t count() const noexcept { return std::uint64_t{1} << cotree_.size(); }
  std::span<const std::size_t> cotree_edges() const noexcept { return cotree_; }
  SignedGraph at(std::uint64_t pattern) const;
  const Graph& graph() const noexcept { return g_; }

 private:
  Graph g_;
  std::vector<std::size_t> cotree_;
};

std::vector<SignedGraph> enumerate_signatures(const Graph& g);

}  // namespace snlab
