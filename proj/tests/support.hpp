#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "snlab/enumeration.hpp"
#include "snlab/formats.hpp"
#include "snlab/graph.hpp"

namespace testing {

inline snlab::SignedGraph sgl(const std::string& text) { return snlab::read_single_sgl(text); }

// Connected graphs on 1..n_max vertices, one per isomorphism class.
inline std::vector<snlab::Graph> connected_up_to(int n_max, const snlab::GraphFilter& filter = {}) {
  std::vector<snlab::Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    auto level = snlab::connected_graphs(n, filter);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Every cotree signature of every connected graph on 1..n_max vertices.
inline std::vector<snlab::SignedGraph> signed_up_to(int n_max) {
  std::vector<snlab::SignedGraph> out;
  for (const auto& g : connected_up_to(n_max)) {
    auto sigs = snlab::enumerate_signatures(g);
    out.insert(out.end(), sigs.begin(), sigs.end());
  }
  return out;
}

inline snlab::SignedGraph signed_cycle(int q, int negative_edges) {
  std::vector<snlab::SignedEdge> es;
  for (int i = 0; i < q; ++i) {
    es.push_back({i, (i + 1) % q, i < negative_edges ? snlab::Sign::Negative : snlab::Sign::Positive});
  }
  return snlab::SignedGraph(q, es);
}

}  // namespace testing
