#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "snlab/graph.hpp"
#include "snlab/kernels.hpp"

namespace snlab {

// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int order) : n_(order), data_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0) {}
  IntMatrix(int order, std::vector<std::int64_t> row_major);

  int order() const noexcept { return n_; }
  std::int64_t operator()(int i, int j) const { return data_[index(i, j)]; }
  std::int64_t& operator()(int i, int j) { return data_[index(i, j)]; }
  std::span<const std::int64_t> data() const noexcept { return data_; }
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<std::int64_t> data_;
};

// Integer polynomial, coefficients in descending degree order.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> descending) : coeffs_(std::move(descending)) {}

  std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  // Multiplicity of the root 0: the number of trailing zero coefficients.
  int zero_root_multiplicity() const;
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

IntMatrix signed_adjacency(const SignedGraph& sg);

// Rank over the rationals by fraction-free (Bareiss) elimination. Uses the
// SIMD row kernel when the Hadamard bound keeps every minor below 2^31.
int rank_exact(const IntMatrix& m);
int rank_exact(const IntMatrix& m, kernels::Isa isa);

int nullity(const SignedGraph& sg);

inline constexpr int kCharPolyCap = 16;

// det(lambda*I - m) by the division-free Samuelson-Berkowitz recurrence.
// Throws CapacityError above kCharPolyCap or if a coefficient overflows.
IntPolynomial char_poly_exact(const IntMatrix& m);

// Subgraph whose components are all K2 or cycles.
struct BasicSubgraph {
  std::vector<Edge> edges;           // sorted
  int order = 0;                     // vertices covered
  int components = 0;                // p(u)
  int cycles = 0;                    // c(u)
  int negative_cycle_edges = 0;      // s(u), summed over all cycle components

  // (-1)^(p+s) * 2^c
  std::int64_t sachs_term() const;
};

// Every basic subgraph covering exactly `vertices` vertices, each once.
std::vector<BasicSubgraph> enumerate_basic_subgraphs(const SignedGraph& sg, int vertices);

// a_i of the characteristic polynomial, a_0 = 1.
std::int64_t sachs_coefficient(const SignedGraph& sg, int i);

// Basic subgraphs of an underlying graph, packed for repeated evaluation
// under different signatures: one term per basic subgraph with its
// (-1)^p 2^c weight and the mask of its cycle edges.
class SachsTable {
 public:
  static constexpr std::size_t kEdgeCap = 128;
  static constexpr std::size_t kTermCap = std::size_t{1} << 22;

  // Throws CapacityError above kEdgeCap edges or kTermCap terms.
  explicit SachsTable(const Graph& g);

  int order() const noexcept { return n_; }
  std::size_t terms() const noexcept { return weight_.size(); }

  // a_0..a_n for the signature whose edge i is negative iff bit i is set.
  std::vector<std::int64_t> coefficients(std::uint64_t negative_lo, std::uint64_t negative_hi,
                                         kernels::Isa isa = kernels::active()) const;
  std::vector<std::int64_t> coefficients(const SignedGraph& sg, kernels::Isa isa = kernels::active()) const;

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::size_t> offsets_;  // terms of order i occupy [offsets_[i], offsets_[i+1])
  std::vector<std::uint64_t> lo_, hi_;
  std::vector<std::int64_t> weight_;
};

// a_0..a_n via a SachsTable.
std::vector<std::int64_t> sachs_coefficients(const SignedGraph& sg);

}  // namespace snlab
