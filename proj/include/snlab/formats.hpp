#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "snlab/graph.hpp"

namespace snlab {

// graph6: order prefix then upper-triangle column-order bits in 6-bit groups,
// each offset by 63. Throws ParseError (line 0) on malformed input.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view line);

// All graphs in a graph6 stream; a leading ">>graph6<<" header and blank
// lines are skipped. Errors carry the 1-based line number.
std::vector<Graph> read_graph6(std::istream& in, const std::string& source = "<graph6>");
void write_graph6(std::ostream& out, const std::vector<Graph>& graphs);

// .sgl signed-graph list: a record is a line holding n followed by one
// `u v s` line per edge (0 <= u < v < n, s in {+,-}); records are separated
// by blank lines and `#` starts a comment line.
void write_sgl(std::ostream& out, const SignedGraph& sg);
void write_sgl(std::ostream& out, const std::vector<SignedGraph>& graphs);
std::string to_sgl(const SignedGraph& sg);

struct SglRecord {
  SignedGraph graph;
  std::size_t line = 0;  // line of the order header
};

std::vector<SglRecord> read_sgl(std::istream& in, const std::string& source = "<sgl>");
SignedGraph read_single_sgl(std::string_view text);

}  // namespace snlab
