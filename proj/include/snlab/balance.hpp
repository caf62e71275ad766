#pragma once

#include <optional>
#include <span>
#include <vector>

#include "snlab/graph.hpp"

namespace snlab {

// Product of the edge signs along c. Throws InputError if c is not a cycle of sg.
Sign cycle_sign(const SignedGraph& sg, const Cycle& c);

// Canonical spanning forest: BFS from the smallest unvisited vertex of each
// component, neighbours in ascending order.
struct SpanningForest {
  std::vector<Vertex> parent;        // -1 at roots
  std::vector<std::size_t> tree_edges;    // ascending edge indices
  std::vector<std::size_t> cotree_edges;  // ascending edge indices
};

SpanningForest canonical_forest(const Graph& g);

// Vertex signs s with s(u) * sigma(uv) * s(v) = + on every edge.
struct SwitchingCertificate {
  std::vector<Sign> assignment;

  // The vertices carrying a negative sign; switching at them makes every edge positive.
  std::vector<Vertex> switching_set() const;
};

struct BalanceResult {
  bool balanced = false;
  std::optional<SwitchingCertificate> certificate;  // when balanced
  std::optional<Cycle> negative_cycle;              // when unbalanced

  explicit operator bool() const noexcept { return balanced; }
};

BalanceResult is_balanced(const SignedGraph& sg);

// Negates every edge with exactly one end in `side`.
SignedGraph switch_signs(const SignedGraph& sg, std::span<const Vertex> side);

// Switching-class representative: every canonical-forest edge positive.
SignedGraph canonical_signature(const SignedGraph& sg);

}  // namespace snlab
