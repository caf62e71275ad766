#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "snlab/graph.hpp"

namespace snlab {

// A set of pairwise vertex-disjoint edges, stored sorted.
class Matching {
 public:
  Matching() = default;
  // Throws InputError if two edges share a vertex.
  explicit Matching(std::vector<Edge> edges);

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool covers(Vertex v) const;
  bool contains(const Edge& e) const;
  // Every edge is an edge of g.
  bool lies_in(const Graph& g) const;

  friend auto operator<=>(const Matching&, const Matching&) = default;
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

// Size of a maximum matching (Edmonds' blossom algorithm).
int matching_number(const Graph& g);

// The lexicographically least maximum matching.
Matching max_matching(const Graph& g);

// True if g has an M-augmenting path, i.e. M is not maximum.
bool has_augmenting_path(const Graph& g, const Matching& m);

inline constexpr std::size_t kMatchingEnumerationCap = 24;

// Exhaustive search over matchings; lexicographically least maximum
// matching. Throws CapacityError when |E| > kMatchingEnumerationCap.
Matching brute_force_max_matching(const Graph& g);

// All maximum matchings in lexicographic order (|E| capped as above).
std::vector<Matching> maximum_matchings(const Graph& g);
std::uint64_t count_maximum_matchings(const Graph& g);

// Matching-set census of a connected unicyclic graph with cycle C_q.
struct MatchingSets {
  std::vector<Edge> cycle_to_forest;     // E1: edges with exactly one end on C_q
  std::uint64_t maximum_matchings = 0;   // |F1|
  std::uint64_t forest_matchings = 0;    // |F2|, maximum matchings of G - V(C_q)
  std::uint64_t meeting_e1 = 0;          // |F1'|
  std::uint64_t avoiding_e1 = 0;         // |F1''|
};

// Throws InputError unless g is connected and unicyclic.
MatchingSets matching_sets(const Graph& g);

// Both sides of the tree-matching equivalences for unicyclic graphs, each
// computed independently.
struct EquivalenceSides {
  bool lhs = false;
  bool rhs = false;
};

// Even cycle: lhs = [m(T_G) = m([T_G])],
// rhs = [m(G) = m(C_q) + m([T_G]) and no maximum matching meets E1].
// Throws InputError for odd cycles or non-unicyclic input.
EquivalenceSides even_cycle_matching_sides(const Graph& g);

// Odd cycle: lhs = [m(T_G) = m([T_G])], rhs = [m(G) = m([T_G]) + m(C_q)].
// Throws InputError for even cycles or non-unicyclic input.
EquivalenceSides odd_cycle_matching_sides(const Graph& g);

}  // namespace snlab
