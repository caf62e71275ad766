#include "snlab/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "snlab/errors.hpp"

namespace snlab {

IntMatrix::IntMatrix(int order, std::vector<std::int64_t> row_major) : n_(order), data_(std::move(row_major)) {
  if (order < 0 || data_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
    throw InputError("matrix data does not match order " + std::to_string(order));
  }
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

int IntPolynomial::zero_root_multiplicity() const {
  int count = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend() && *it == 0; ++it) ++count;
  return count;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    const int power = degree() - static_cast<int>(k);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1 || power == 0) out << mag;
    if (power > 0) out << "x";
    if (power > 1) out << "^" << power;
    first = false;
  }
  return first ? "0" : out.str();
}

IntMatrix signed_adjacency(const SignedGraph& sg) {
  IntMatrix a(sg.order());
  for (std::size_t i = 0; i < sg.size(); ++i) {
    const Edge& e = sg.graph().edge(i);
    a(e.u, e.v) = a(e.v, e.u) = to_int(sg.sign(i));
  }
  return a;
}

namespace {

// Product of max(1, |row|^2) against kNarrowLimit^2: bounds every minor.
bool minors_fit_narrow(const IntMatrix& m) {
  const __int128 limit = static_cast<__int128>(kernels::kNarrowLimit) * kernels::kNarrowLimit;
  __int128 bound = 1;
  for (int i = 0; i < m.order(); ++i) {
    __int128 norm2 = 0;
    for (int j = 0; j < m.order(); ++j) {
      const __int128 x = m(i, j);
      norm2 += x * x;
      if (norm2 > limit) return false;
    }
    if (norm2 > 1) bound *= norm2;
    if (bound > limit) return false;
  }
  return true;
}

void checked_mul(__int128 a, __int128 b, __int128& out) {
  if (__builtin_mul_overflow(a, b, &out)) throw CapacityError("characteristic polynomial overflow");
}
void checked_add(__int128 a, __int128 b, __int128& out) {
  if (__builtin_add_overflow(a, b, &out)) throw CapacityError("characteristic polynomial overflow");
}

}  // namespace

int rank_exact(const IntMatrix& m) { return rank_exact(m, kernels::active()); }

int rank_exact(const IntMatrix& m, kernels::Isa isa) {
  const int n = m.order();
  if (!minors_fit_narrow(m)) isa = kernels::Isa::Scalar;
  std::vector<std::int64_t> a(m.data().begin(), m.data().end());
  const auto row = [&](int i) {
    return std::span<std::int64_t>(a.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(n),
                                   static_cast<std::size_t>(n));
  };
  int rank = 0;
  std::int64_t prev = 1;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot_row = -1;
    for (int r = rank; r < n; ++r) {
      if (row(r)[static_cast<std::size_t>(col)] != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) std::swap_ranges(row(pivot_row).begin(), row(pivot_row).end(), row(rank).begin());
    const auto tail = static_cast<std::size_t>(col + 1);
    const auto pr = row(rank);
    const std::int64_t pivot = pr[static_cast<std::size_t>(col)];
    for (int r = rank + 1; r < n; ++r) {
      auto target = row(r);
      const std::int64_t factor = target[static_cast<std::size_t>(col)];
      kernels::eliminate_row(isa, target.subspan(tail), std::span<const std::int64_t>(pr.subspan(tail)),
                             {pivot, factor, prev});
      target[static_cast<std::size_t>(col)] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

int nullity(const SignedGraph& sg) { return sg.order() - rank_exact(signed_adjacency(sg)); }

IntPolynomial char_poly_exact(const IntMatrix& m) {
  const int n = m.order();
  if (n > kCharPolyCap) {
    throw CapacityError("characteristic polynomial capped at order " + std::to_string(kCharPolyCap));
  }
  if (n == 0) return IntPolynomial({1});

  // p holds det(lambda*I - A_k) for the trailing principal submatrix A_k.
  std::vector<__int128> p{1, -static_cast<__int128>(m(n - 1, n - 1))};
  for (int k = n - 2; k >= 0; --k) {
    const int s = n - k - 1;  // order of the trailing block below row k
    // t = (1, -a_kk, -R C, -R A1 C, ..., -R A1^(s-1) C)
    std::vector<__int128> t(static_cast<std::size_t>(s) + 2);
    t[0] = 1;
    t[1] = -static_cast<__int128>(m(k, k));
    std::vector<__int128> v(static_cast<std::size_t>(s)), next(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) v[static_cast<std::size_t>(i)] = m(k + 1 + i, k);
    for (int power = 0; power < s; ++power) {
      __int128 dot = 0;
      for (int j = 0; j < s; ++j) {
        __int128 term;
        checked_mul(m(k, k + 1 + j), v[static_cast<std::size_t>(j)], term);
        checked_add(dot, term, dot);
      }
      t[static_cast<std::size_t>(power) + 2] = -dot;
      if (power + 1 == s) break;
      for (int i = 0; i < s; ++i) {
        __int128 acc = 0;
        for (int j = 0; j < s; ++j) {
          __int128 term;
          checked_mul(m(k + 1 + i, k + 1 + j), v[static_cast<std::size_t>(j)], term);
          checked_add(acc, term, acc);
        }
        next[static_cast<std::size_t>(i)] = acc;
      }
      std::swap(v, next);
    }
    std::vector<__int128> q(static_cast<std::size_t>(s) + 2, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j <= std::min(i, p.size() - 1); ++j) {
        __int128 term;
        checked_mul(t[i - j], p[j], term);
        checked_add(q[i], term, q[i]);
      }
    }
    p = std::move(q);
  }

  std::vector<std::int64_t> out;
  out.reserve(p.size());
  for (__int128 c : p) {
    if (c > INT64_MAX || c < INT64_MIN) throw CapacityError("characteristic polynomial coefficient exceeds int64");
    out.push_back(static_cast<std::int64_t>(c));
  }
  return IntPolynomial(std::move(out));
}

namespace {

struct Component {
  bool cycle = false;
  std::vector<Vertex> vertices;  // K2: the two ends; cycle: cyclic order
};

// Visits every basic subgraph once. Each component is chosen at its smallest
// vertex: that vertex is left uncovered, paired with a larger free
// neighbour, or closed into a cycle through larger free vertices (one
// orientation only).
class BasicSubgraphWalker {
 public:
  explicit BasicSubgraphWalker(const Graph& g) : g_(g), covered_(static_cast<std::size_t>(g.order()), false) {}

  template <class Visit>
  void run(Visit&& visit) {
    step(0, visit);
  }

 private:
  template <class Visit>
  void step(Vertex v, Visit& visit) {
    while (v < g_.order() && covered_[idx(v)]) ++v;
    if (v == g_.order()) {
      visit(std::as_const(parts_), covered_count_);
      return;
    }
    step(v + 1, visit);

    covered_[idx(v)] = true;
    for (Vertex w : g_.neighbors(v)) {
      if (w < v || covered_[idx(w)]) continue;
      covered_[idx(w)] = true;
      parts_.push_back({false, {v, w}});
      covered_count_ += 2;
      step(v + 1, visit);
      covered_count_ -= 2;
      parts_.pop_back();
      covered_[idx(w)] = false;
    }
    path_.assign(1, v);
    extend(v, visit);
    covered_[idx(v)] = false;
  }

  template <class Visit>
  void extend(Vertex start, Visit& visit) {
    const Vertex last = path_.back();
    for (Vertex w : g_.neighbors(last)) {
      if (w == start) {
        if (path_.size() >= 3 && path_[1] < last) {
          parts_.push_back({true, path_});
          covered_count_ += static_cast<int>(path_.size());
          auto saved = path_;
          step(start + 1, visit);
          path_ = std::move(saved);
          covered_count_ -= static_cast<int>(path_.size());
          parts_.pop_back();
        }
        continue;
      }
      if (w < start || covered_[idx(w)]) continue;
      covered_[idx(w)] = true;
      path_.push_back(w);
      extend(start, visit);
      path_.pop_back();
      covered_[idx(w)] = false;
    }
  }

  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  const Graph& g_;
  std::vector<bool> covered_;
  std::vector<Component> parts_;
  std::vector<Vertex> path_;
  int covered_count_ = 0;
};

std::int64_t weight_of(int components, int cycles) {
  std::int64_t w = std::int64_t{1} << cycles;
  return components % 2 ? -w : w;
}

}  // namespace

std::int64_t BasicSubgraph::sachs_term() const {
  return weight_of(components + negative_cycle_edges, cycles);
}

std::vector<BasicSubgraph> enumerate_basic_subgraphs(const SignedGraph& sg, int vertices) {
  std::vector<BasicSubgraph> out;
  if (vertices < 0 || vertices > sg.order()) return out;
  BasicSubgraphWalker walker(sg.graph());
  walker.run([&](const std::vector<Component>& parts, int covered) {
    if (covered != vertices) return;
    BasicSubgraph b;
    b.order = covered;
    b.components = static_cast<int>(parts.size());
    for (const Component& c : parts) {
      if (!c.cycle) {
        b.edges.emplace_back(c.vertices[0], c.vertices[1]);
        continue;
      }
      ++b.cycles;
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        Edge e(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
        b.edges.push_back(e);
        if (sg.sign(e.u, e.v) == Sign::Negative) ++b.negative_cycle_edges;
      }
    }
    std::sort(b.edges.begin(), b.edges.end());
    out.push_back(std::move(b));
  });
  std::sort(out.begin(), out.end(), [](const BasicSubgraph& a, const BasicSubgraph& b) { return a.edges < b.edges; });
  return out;
}

std::int64_t sachs_coefficient(const SignedGraph& sg, int i) {
  if (i == 0) return 1;
  std::int64_t total = 0;
  for (const BasicSubgraph& b : enumerate_basic_subgraphs(sg, i)) total += b.sachs_term();
  return total;
}

SachsTable::SachsTable(const Graph& g) : n_(g.order()), edge_count_(g.size()) {
  if (g.size() > kEdgeCap) {
    throw CapacityError("Sachs table supports at most " + std::to_string(kEdgeCap) + " edges");
  }
  struct Term {
    int order;
    std::uint64_t lo, hi;
    std::int64_t weight;
  };
  std::vector<Term> terms;
  BasicSubgraphWalker walker(g);
  walker.run([&](const std::vector<Component>& parts, int covered) {
    if (covered == 0) return;
    if (terms.size() >= kTermCap) throw CapacityError("too many basic subgraphs");
    Term t{covered, 0, 0, 0};
    int cycles = 0;
    for (const Component& c : parts) {
      if (!c.cycle) continue;
      ++cycles;
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        std::size_t e = *g.edge_index(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
        (e < 64 ? t.lo : t.hi) |= std::uint64_t{1} << (e % 64);
      }
    }
    t.weight = weight_of(static_cast<int>(parts.size()), cycles);
    terms.push_back(t);
  });
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.order < b.order; });
  offsets_.assign(static_cast<std::size_t>(n_) + 2, 0);
  for (const Term& t : terms) ++offsets_[static_cast<std::size_t>(t.order) + 1];
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  for (const Term& t : terms) {
    lo_.push_back(t.lo);
    hi_.push_back(t.hi);
    weight_.push_back(t.weight);
  }
}

std::vector<std::int64_t> SachsTable::coefficients(std::uint64_t negative_lo, std::uint64_t negative_hi,
                                                   kernels::Isa isa) const {
  std::vector<std::int64_t> a(static_cast<std::size_t>(n_) + 1, 0);
  a[0] = 1;
  for (int i = 1; i <= n_; ++i) {
    const std::size_t begin = offsets_[static_cast<std::size_t>(i)];
    const std::size_t len = offsets_[static_cast<std::size_t>(i) + 1] - begin;
    a[static_cast<std::size_t>(i)] = kernels::signed_parity_sum(
        isa, std::span(lo_).subspan(begin, len), std::span(hi_).subspan(begin, len),
        std::span(weight_).subspan(begin, len), negative_lo, negative_hi);
  }
  return a;
}

std::vector<std::int64_t> SachsTable::coefficients(const SignedGraph& sg, kernels::Isa isa) const {
  if (sg.order() != n_ || sg.size() != edge_count_) throw InputError("signed graph does not match Sachs table");
  std::uint64_t lo = 0, hi = 0;
  for (std::size_t e = 0; e < sg.size(); ++e) {
    if (sg.sign(e) == Sign::Negative) (e < 64 ? lo : hi) |= std::uint64_t{1} << (e % 64);
  }
  return coefficients(lo, hi, isa);
}

std::vector<std::int64_t> sachs_coefficients(const SignedGraph& sg) {
  return SachsTable(sg.graph()).coefficients(sg);
}

}  // namespace snlab
