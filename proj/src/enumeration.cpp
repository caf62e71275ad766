#include "snlab/enumeration.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <unordered_set>

#include "snlab/balance.hpp"
#include "snlab/errors.hpp"
#include "snlab/formats.hpp"

namespace snlab {
namespace {

constexpr int kMaxSmall = kCanonicalOrderCap;

struct SmallGraph {
  int n = 0;
  std::array<std::uint32_t, kMaxSmall> adj{};

  bool adjacent(int a, int b) const { return (adj[static_cast<std::size_t>(a)] >> b) & 1U; }
  void connect(int a, int b) {
    adj[static_cast<std::size_t>(a)] |= 1U << b;
    adj[static_cast<std::size_t>(b)] |= 1U << a;
  }
};

SmallGraph to_small(const Graph& g) {
  if (g.order() > kMaxSmall) {
    throw CapacityError("canonical form supports at most " + std::to_string(kMaxSmall) + " vertices");
  }
  SmallGraph s;
  s.n = g.order();
  for (const Edge& e : g.edges()) s.connect(e.u, e.v);
  return s;
}

int pair_bits(int n) { return n * (n - 1) / 2; }

// Iterated degree refinement; colours are ranks of isomorphism-invariant
// signatures, so they are themselves invariant.
std::vector<int> refine(const SmallGraph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) color[static_cast<std::size_t>(v)] = std::popcount(g.adj[static_cast<std::size_t>(v)]);
  auto distinct = [](std::vector<int> c) {
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  };
  std::size_t classes = distinct(color);
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (int w = 0; w < g.n; ++w) {
        if (g.adjacent(v, w)) nb.push_back(color[static_cast<std::size_t>(w)]);
      }
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    auto ranked = sig;
    std::sort(ranked.begin(), ranked.end());
    ranked.erase(std::unique(ranked.begin(), ranked.end()), ranked.end());
    for (int v = 0; v < g.n; ++v) {
      color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(ranked.begin(), ranked.end(), sig[static_cast<std::size_t>(v)]) - ranked.begin());
    }
    if (ranked.size() == classes) return color;
    classes = ranked.size();
  }
}

// Backtracking search for the least column-order code over colour-respecting
// vertex orders, pruning on code prefixes.
class Canonizer {
 public:
  explicit Canonizer(const SmallGraph& g) : g_(g), color_(refine(g)) {
    slots_ = color_;
    std::sort(slots_.begin(), slots_.end());
    perm_.assign(static_cast<std::size_t>(g.n), 0);
    prefix_.assign(static_cast<std::size_t>(g.n) + 1, 0);
    best_prefix_.assign(static_cast<std::size_t>(g.n) + 1, 0);
  }

  std::uint64_t run() {
    if (g_.n == 0) return 0;
    search(0, 0);
    return best_;
  }

  std::vector<int> best_order() const { return best_perm_; }

 private:
  // Each prefix code extends the previous one, so comparing against the
  // best prefix of the same depth orders partial labellings correctly.
  void search(int depth, std::uint32_t used) {
    if (depth == g_.n) {
      if (!have_ || prefix_[static_cast<std::size_t>(depth)] < best_) {
        best_ = prefix_[static_cast<std::size_t>(depth)];
        best_prefix_ = prefix_;
        best_perm_ = perm_;
        have_ = true;
      }
      return;
    }
    const int want = slots_[static_cast<std::size_t>(depth)];
    for (int w = 0; w < g_.n; ++w) {
      if ((used >> w) & 1U || color_[static_cast<std::size_t>(w)] != want) continue;
      std::uint64_t code = prefix_[static_cast<std::size_t>(depth)];
      for (int i = 0; i < depth; ++i) code = (code << 1) | (g_.adjacent(perm_[static_cast<std::size_t>(i)], w) ? 1U : 0U);
      if (have_ && code > best_prefix_[static_cast<std::size_t>(depth) + 1]) continue;
      perm_[static_cast<std::size_t>(depth)] = w;
      prefix_[static_cast<std::size_t>(depth) + 1] = code;
      search(depth + 1, used | (1U << w));
    }
  }

  const SmallGraph& g_;
  std::vector<int> color_, slots_, perm_, best_perm_;
  std::vector<std::uint64_t> prefix_, best_prefix_;
  std::uint64_t best_ = 0;
  bool have_ = false;
};

std::uint64_t small_code(const SmallGraph& g) { return Canonizer(g).run(); }

SmallGraph small_from_code(int n, std::uint64_t code) {
  SmallGraph s;
  s.n = n;
  int k = pair_bits(n) - 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --k)
      if ((code >> k) & 1U) s.connect(i, j);
  return s;
}

using CodeList = std::vector<std::uint64_t>;

std::vector<std::uint64_t> sorted_unique(std::unordered_set<std::uint64_t>& set) {
  CodeList out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Memoised levels of the three generators.
class CodeCache {
 public:
  enum class Kind { All, Trees, Unicyclic };

  const CodeList& get(Kind kind, int n) {
    std::lock_guard lock(mu_);
    return level(kind, n);
  }

 private:
  const CodeList& level(Kind kind, int n) {
    auto key = std::make_pair(kind, n);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    CodeList codes;
    switch (kind) {
      case Kind::All: codes = grow_all(n); break;
      case Kind::Trees: codes = grow_leaves(n, false); break;
      case Kind::Unicyclic: codes = grow_leaves(n, true); break;
    }
    return cache_.emplace(key, std::move(codes)).first->second;
  }

  CodeList grow_all(int n) {
    if (n <= 1) return CodeList{0};
    const CodeList& prev = level(Kind::All, n - 1);
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t code : prev) {
      const SmallGraph base = small_from_code(n - 1, code);
      for (std::uint32_t nbrs = 0; nbrs < (1U << (n - 1)); ++nbrs) {
        SmallGraph g = base;
        g.n = n;
        for (int v = 0; v < n - 1; ++v)
          if ((nbrs >> v) & 1U) g.connect(v, n - 1);
        seen.insert(small_code(g));
      }
    }
    return sorted_unique(seen);
  }

  // Every tree on n >= 2 vertices, and every unicyclic graph other than
  // C_n, has a leaf whose removal stays in the class.
  CodeList grow_leaves(int n, bool unicyclic) {
    std::unordered_set<std::uint64_t> seen;
    SmallGraph root;
    root.n = n;
    if (unicyclic) {
      if (n < 3) return {};
      for (int v = 0; v < n; ++v) root.connect(v, (v + 1) % n);
      seen.insert(small_code(root));
      if (n == 3) return sorted_unique(seen);
    } else if (n <= 2) {
      if (n == 2) root.connect(0, 1);
      seen.insert(small_code(root));
      return sorted_unique(seen);
    }
    for (std::uint64_t code : level(unicyclic ? Kind::Unicyclic : Kind::Trees, n - 1)) {
      const SmallGraph base = small_from_code(n - 1, code);
      for (int v = 0; v < n - 1; ++v) {
        SmallGraph g = base;
        g.n = n;
        g.connect(v, n - 1);
        seen.insert(small_code(g));
      }
    }
    return sorted_unique(seen);
  }

  std::mutex mu_;
  std::map<std::pair<Kind, int>, CodeList> cache_;
};

CodeCache& cache() {
  static CodeCache instance;
  return instance;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return small_code(to_small(g)); }

Graph decode_code(int n, std::uint64_t code) {
  if (n < 0 || n > kMaxSmall) throw CapacityError("code order out of range");
  std::vector<Edge> edges;
  int k = pair_bits(n) - 1;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, --k)
      if ((code >> k) & 1U) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph canonical_form(const Graph& g) { return decode_code(g.order(), canonical_code(g)); }

bool GraphFilter::accepts(const Graph& g) const {
  const int c = cycle_space_dim(g);
  if (max_c && c > *max_c) return false;
  if (unicyclic_only && !(c == 1 && is_connected(g))) return false;
  if (min_girth) {
    auto gi = girth(g);
    if (gi && *gi < *min_girth) return false;
  }
  return true;
}

EnumerationCapacity EnumerationCapacity::from_environment() {
  EnumerationCapacity cap;
  if (std::getenv("SNLAB_CAPACITY_OVERRIDE") != nullptr) {
    cap.general = kCanonicalOrderCap;
    cap.sparse = kCanonicalOrderCap;
  }
  return cap;
}

std::vector<Graph> connected_graphs(int n, const GraphFilter& filter, const EnumerationCapacity& cap) {
  if (n < 1) throw InputError("enumeration needs n >= 1");
  const bool sparse = filter.unicyclic_only || (filter.max_c && *filter.max_c <= 1);
  const int limit = std::min(sparse ? cap.sparse : cap.general, kCanonicalOrderCap);
  if (n > limit) {
    throw CapacityError("internal enumeration capped at n = " + std::to_string(limit) + " for this filter");
  }
  CodeList codes;
  if (!sparse) {
    codes = cache().get(CodeCache::Kind::All, n);
  } else if (filter.unicyclic_only) {
    codes = cache().get(CodeCache::Kind::Unicyclic, n);
  } else if (*filter.max_c >= 0) {
    codes = cache().get(CodeCache::Kind::Trees, n);
    if (*filter.max_c == 1) {
      const CodeList& uni = cache().get(CodeCache::Kind::Unicyclic, n);
      codes.insert(codes.end(), uni.begin(), uni.end());
      std::sort(codes.begin(), codes.end());
    }
  }
  std::vector<Graph> out;
  for (std::uint64_t code : codes) {
    Graph g = decode_code(n, code);
    if (is_connected(g) && filter.accepts(g)) out.push_back(std::move(g));
  }
  return out;
}

GraphStream enumerate_connected(int n, const GraphFilter& filter, const EnumerationCapacity& cap) {
  return GraphStream::from_list(connected_graphs(n, filter, cap));
}

GraphStream GraphStream::from_list(std::vector<Graph> graphs) {
  GraphStream s;
  s.list_ = std::move(graphs);
  return s;
}

GraphStream GraphStream::from_graph6(std::unique_ptr<std::istream> in, std::string source) {
  GraphStream s;
  s.in_ = std::move(in);
  s.source_ = std::move(source);
  return s;
}

GraphStream GraphStream::open_graph6(const std::string& path) {
  auto file = std::make_unique<std::ifstream>(path);
  if (!*file) throw InputError("cannot open " + path);
  return from_graph6(std::move(file), path);
}

std::optional<Graph> GraphStream::next() {
  if (!in_) {
    if (cursor_ == list_.size()) return std::nullopt;
    return list_[cursor_++];
  }
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view body = line;
    if (body.starts_with(">>graph6<<")) body.remove_prefix(10);
    if (body.empty()) continue;
    try {
      return decode_graph6(body);
    } catch (const ParseError& e) {
      // decode_graph6 reports "<graph6>:0: reason"; rebase onto this file.
      std::string what = e.what();
      throw ParseError(source_, line_, what.substr(what.find(": ") + 2));
    }
  }
  return std::nullopt;
}

std::vector<Graph> GraphStream::collect() {
  std::vector<Graph> out;
  while (auto g = next()) out.push_back(std::move(*g));
  return out;
}

CotreeSignatures::CotreeSignatures(Graph g) : g_(std::move(g)) {
  cotree_ = canonical_forest(g_).cotree_edges;
  if (cotree_.size() > static_cast<std::size_t>(kMaxCotreeEdges)) {
    throw CapacityError("signature expansion capped at c = " + std::to_string(kMaxCotreeEdges));
  }
}

SignedGraph CotreeSignatures::at(std::uint64_t pattern) const {
  std::vector<Sign> signs(g_.size(), Sign::Positive);
  for (std::size_t k = 0; k < cotree_.size(); ++k) {
    if ((pattern >> k) & 1U) signs[cotree_[k]] = Sign::Negative;
  }
  return SignedGraph(g_, std::move(signs));
}

std::vector<SignedGraph> enumerate_signatures(const Graph& g) {
  CotreeSignatures sigs(g);
  std::vector<SignedGraph> out;
  out.reserve(static_cast<std::size_t>(sigs.count()));
  for (std::uint64_t p = 0; p < sigs.count(); ++p) out.push_back(sigs.at(p));
  return out;
}

}  // namespace snlab
