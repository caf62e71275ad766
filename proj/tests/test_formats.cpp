#include <random>
#include <sstream>

#include "doctest.h"
#include "snlab/enumeration.hpp"
#include "snlab/errors.hpp"
#include "snlab/formats.hpp"
#include "support.hpp"

using namespace snlab;

namespace {

std::size_t parse_error_line(const std::string& text, bool graph6) {
  std::istringstream in(text);
  try {
    if (graph6) {
      read_graph6(in, "t");
    } else {
      read_sgl(in, "t");
    }
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

SignedGraph random_signed(std::mt19937& rng, int n) {
  std::vector<SignedEdge> es;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (rng() % 3 == 0) es.push_back({u, v, rng() & 1 ? Sign::Negative : Sign::Positive});
  return SignedGraph(n, es);
}

}  // namespace

TEST_CASE("decoding a hand-checked graph6 line") {
  // 'D' = 5 vertices; "?{" = 000000 111100: the last four pairs (i,4).
  const Graph g = decode_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(g.size() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(g.has_edge(v, 4));
  CHECK(encode_graph6(g) == "D?{");
  CHECK(encode_graph6(named::empty(1)) == "@");
  CHECK(encode_graph6(named::empty(0)) == "?");
  CHECK(encode_graph6(named::complete(2)) == "A_");
}

TEST_CASE("graph6 order prefixes") {
  for (int n : {2, 62, 63, 64, 200}) {
    const Graph p = named::path(n);
    const std::string enc = encode_graph6(p);
    CHECK((enc[0] == '~') == (n >= 63));
    CHECK(decode_graph6(enc) == p);
  }
  CHECK(encode_graph6(named::empty(63)).substr(0, 4) == "~??~");
  // The eight-byte form names a graph beyond the order limit.
  CHECK_THROWS_AS(decode_graph6("~~?@????"), ParseError);
}

TEST_CASE("malformed graph6 lines") {
  CHECK_THROWS_AS(decode_graph6(""), ParseError);
  CHECK_THROWS_AS(decode_graph6("B!"), ParseError);
  CHECK_THROWS_AS(decode_graph6("D?"), ParseError);
  CHECK_THROWS_AS(decode_graph6("D?{?"), ParseError);
  CHECK_THROWS_AS(decode_graph6("A`"), ParseError);  // nonzero padding
  CHECK_THROWS_AS(decode_graph6(":Fa@x^"), ParseError);
  CHECK_THROWS_AS(decode_graph6("&A_"), ParseError);
  CHECK_THROWS_AS(decode_graph6("~??"), ParseError);
}

TEST_CASE("graph6 streams report line numbers and skip headers") {
  std::istringstream ok(">>graph6<<D?{\r\n\nA_\n");
  const auto gs = read_graph6(ok);
  REQUIRE(gs.size() == 2);
  CHECK(gs[1] == named::complete(2));
  std::istringstream empty("");
  CHECK(read_graph6(empty).empty());
  CHECK(parse_error_line("D?{\nA_\nB!\n", true) == 3);
  CHECK(parse_error_line("\n\nD?\n", true) == 3);

  std::ostringstream out;
  write_graph6(out, {named::path(3), named::cycle(4)});
  std::istringstream back(out.str());
  CHECK(read_graph6(back) == std::vector<Graph>{named::path(3), named::cycle(4)});
}

TEST_CASE("sgl text format") {
  CHECK(to_sgl(testing::sgl("2\n0 1 -\n")) == "2\n0 1 -\n");
  CHECK(to_sgl(SignedGraph(named::empty(3))) == "3\n");

  std::istringstream in("# two graphs\n3\n0 1 +\n1 2 -\n\n\n# next\n2\n0 1 +\n");
  const auto recs = read_sgl(in);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].line == 2);
  CHECK(recs[1].line == 8);
  CHECK(recs[0].graph.sign(1, 2) == Sign::Negative);
  CHECK(recs[1].graph == SignedGraph(named::complete(2)));

  std::ostringstream both;
  write_sgl(both, std::vector<SignedGraph>{recs[0].graph, recs[1].graph});
  CHECK(both.str() == "3\n0 1 +\n1 2 -\n\n2\n0 1 +\n");

  std::istringstream none("# nothing\n\n");
  CHECK(read_sgl(none).empty());
  CHECK_THROWS_AS(read_single_sgl(""), InputError);
  CHECK_THROWS_AS(read_single_sgl("1\n\n1\n"), InputError);
}

TEST_CASE("malformed sgl records") {
  CHECK(parse_error_line("3\n0 5 +\n", false) == 2);  // absent edge endpoint
  CHECK(parse_error_line("3\n0 1 *\n", false) == 2);
  CHECK(parse_error_line("3\n1 0 +\n", false) == 2);
  CHECK(parse_error_line("3\n0 1 +\n0 1 -\n", false) == 3);
  CHECK(parse_error_line("x\n", false) == 1);
  CHECK(parse_error_line("3 4\n", false) == 1);
  CHECK(parse_error_line("3\n0 1\n", false) == 2);
  CHECK(parse_error_line("-1\n", false) == 1);
  CHECK(parse_error_line("2\n0 1 +\n\n2\n0 2 +\n", false) == 5);
  std::istringstream in("2\n0 1 +\n0 9 -\n");
  try {
    read_sgl(in, "file.sgl");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).starts_with("file.sgl:3:"));
  }
}

TEST_CASE("sgl round trip") {
  std::mt19937 rng(8);
  std::vector<SignedGraph> all;
  for (int trial = 0; trial < 500; ++trial) {
    const SignedGraph sg = random_signed(rng, 1 + static_cast<int>(rng() % 12));
    CHECK(read_single_sgl(to_sgl(sg)) == sg);
    all.push_back(sg);
  }
  std::stringstream buf;
  write_sgl(buf, all);
  const auto back = read_sgl(buf);
  REQUIRE(back.size() == all.size());
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(back[i].graph == all[i]);
  for (const SignedGraph& sg : testing::signed_up_to(5)) CHECK(read_single_sgl(to_sgl(sg)) == sg);
}
