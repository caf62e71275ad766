#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snlab/graph.hpp"

namespace snlab {

// Spectral invariants of one signed graph together with the bounds
//   n - 2m - c  <=  eta  <=  n - 2m + 2c
// and the slack s = upper - eta.
struct InvariantRecord {
  int n = 0;
  int m = 0;
  int c = 0;
  int eta = 0;
  bool balanced = false;
  int lower = 0;
  int upper = 0;
  int s = 0;

  bool within_bounds() const noexcept { return lower <= eta && eta <= upper; }

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

// Computes every field; performs no checks.
InvariantRecord compute_invariants(const SignedGraph& sg);
// Same record for a graph whose matching number and cycle-space dimension
// are already known (campaigns evaluate many signatures per graph).
InvariantRecord compute_invariants(const SignedGraph& sg, int matching, int cycle_dim);

// Raised when a computed record contradicts a proven bound. Carries the
// offending graph in .sgl form.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& what, InvariantRecord record, std::string sgl)
      : std::runtime_error(what), record_(record), sgl_(std::move(sgl)) {}

  const InvariantRecord& record() const noexcept { return record_; }
  const std::string& sgl() const noexcept { return sgl_; }

 private:
  InvariantRecord record_;
  std::string sgl_;
};

// compute_invariants, then throws TheoremViolation if lower <= eta <= upper fails.
InvariantRecord invariant_record(const SignedGraph& sg);

// The three structural conditions characterising eta = n - 2m + 2c on a
// connected signed graph.
struct UpperBoundConditions {
  bool cycles_disjoint = false;   // cycles pairwise vertex-disjoint
  bool cycle_signs_ok = false;    // each cycle: q = 0 mod 4 positive, or q = 2 mod 4 negative
  bool tree_matching_ok = false;  // m(T_G) = m([T_G])

  bool holds() const noexcept { return cycles_disjoint && cycle_signs_ok && tree_matching_ok; }
};

// Precomputes the signature-independent parts for one underlying graph.
class UpperBoundPredicate {
 public:
  // Throws InputError if g is disconnected.
  explicit UpperBoundPredicate(const Graph& g);

  // sg must have the underlying graph given at construction.
  UpperBoundConditions evaluate(const SignedGraph& sg) const;

 private:
  std::optional<std::vector<Cycle>> cycles_;
  bool tree_matching_ok_ = false;
};

UpperBoundConditions upper_bound_conditions(const SignedGraph& sg);
bool attains_upper(const SignedGraph& sg);

// Nullity class of a connected unbalanced unicyclic signed graph with cycle
// length q, relative to n - 2m:
//   case 1: q odd and m(T_G) = m([T_G])          -> -1
//   case 2: q = 2 mod 4 and m(T_G) = m([T_G])    -> +2
//   case 3: otherwise                            ->  0
struct UnicyclicClass {
  int case_number = 3;
  int offset = 0;
  int q = 0;
  bool tree_matching_equal = false;

  int predicted_eta(int n, int m) const noexcept { return n - 2 * m + offset; }
};

// Throws InputError("not connected" / "not unicyclic" / "not unbalanced").
UnicyclicClass classify_unicyclic(const SignedGraph& sg);

// Extremal family: a star K_{1,c+1} with centre x and leaves y_0..y_c, where
// each y_i (i >= 1) is identified with a vertex of its own block:
//   l1 positive triangles, l2 hexagons with one negative edge, and
//   l3 F-blocks (a positive quadrangle with a pendant edge, y_i being the
//   pendant end).
struct FamilyParams {
  int l1 = 0;
  int l2 = 0;
  int l3 = 0;

  int c() const noexcept { return l1 + l2 + l3; }

  friend auto operator<=>(const FamilyParams&, const FamilyParams&) = default;
};

struct FamilyPrediction {
  int n = 0;
  int m = 0;
  int c = 0;
  int eta = 0;
  int s = 0;

  friend bool operator==(const FamilyPrediction&, const FamilyPrediction&) = default;
};

FamilyPrediction predict_family(const FamilyParams& p);

struct FamilyGraph {
  SignedGraph graph;
  FamilyPrediction predicted;
  Vertex x = 0;   // star centre
  Vertex y0 = 1;  // the retained pendant leaf
};

// Throws InputError on negative or all-zero parameters.
FamilyGraph generate_family(const FamilyParams& p);

// For each s in [0, 3c] except 1, parameters with l1 + l2 + l3 = c and
// 3 l1 + 2 l3 = s (smallest l1, then smallest l3). Throws InputError for c < 1.
std::map<int, FamilyParams> slack_coverage(int c);

struct ReductionStep {
  Vertex pendant = 0;                 // labels of the input graph
  Vertex quasi_pendant = 0;
  std::optional<PendantKind> kind;    // empty once the remaining graph is acyclic
  int eta_after = 0;
};

struct PendantReduction {
  SignedGraph reduced;
  std::vector<Vertex> original;       // reduced vertex -> input vertex
  int eta_before = 0;
  std::vector<ReductionStep> steps;
};

// Repeatedly deletes a pendant vertex together with its neighbour, taking
// the smallest Type I pendant while one exists, then the smallest Type II
// pendant, then (acyclic remainder) the smallest pendant.
PendantReduction pendant_reduction(const SignedGraph& sg);

}  // namespace snlab
