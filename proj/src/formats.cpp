#include "snlab/formats.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "snlab/errors.hpp"

namespace snlab {
namespace {

constexpr int kBias = 63;

void put_bits(std::string& out, std::uint64_t value, int groups) {
  for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(((value >> (6 * k)) & 0x3f) + kBias));
}

[[noreturn]] void bad(const std::string& what) { throw ParseError("<graph6>", 0, what); }

int sextet(char ch) {
  const int v = static_cast<unsigned char>(ch) - kBias;
  if (v < 0 || v > 63) bad(std::string("invalid graph6 character code ") + std::to_string(static_cast<unsigned char>(ch)));
  return v;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    put_bits(out, n, 3);
  } else {
    out.append("~~");
    put_bits(out, n, 6);
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view line) {
  if (line.empty()) bad("empty graph6 line");
  if (line.front() == ':' || line.front() == ';') bad("sparse6 input is not graph6");
  if (line.front() == '&') bad("digraph6 input is not graph6");
  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto read_groups = [&](int groups) {
    if (pos + static_cast<std::size_t>(groups) > line.size()) bad("truncated graph6 order");
    std::uint64_t v = 0;
    for (int k = 0; k < groups; ++k) v = (v << 6) | static_cast<std::uint64_t>(sextet(line[pos++]));
    return v;
  };
  if (line[0] != '~') {
    n = read_groups(1);
  } else if (line.size() > 1 && line[1] != '~') {
    pos = 1;
    n = read_groups(3);
  } else {
    pos = 2;
    n = read_groups(6);
  }
  if (n > 100000) bad("graph6 order " + std::to_string(n) + " too large");
  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = (pairs + 5) / 6;
  if (line.size() - pos != expected) {
    bad("graph6 body has " + std::to_string(line.size() - pos) + " characters, expected " + std::to_string(expected));
  }
  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int group = sextet(line[pos + bit / 6]);
      if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int group = sextet(line[pos + bit / 6]);
    if (group & ((1 << (6 - bit % 6)) - 1)) bad("nonzero graph6 padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::vector<Graph> read_graph6(std::istream& in, const std::string& source) {
  std::vector<Graph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view body = line;
    if (number == 1 && body.starts_with(">>graph6<<")) body.remove_prefix(10);
    if (body.empty()) continue;
    try {
      out.push_back(decode_graph6(body));
    } catch (const ParseError& e) {
      std::string what = e.what();
      throw ParseError(source, number, what.substr(what.find(": ") + 2));
    }
  }
  return out;
}

void write_graph6(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const Graph& g : graphs) out << encode_graph6(g) << '\n';
}

void write_sgl(std::ostream& out, const SignedGraph& sg) {
  out << sg.order() << '\n';
  for (std::size_t i = 0; i < sg.size(); ++i) {
    const Edge& e = sg.graph().edge(i);
    out << e.u << ' ' << e.v << ' ' << (sg.sign(i) == Sign::Positive ? '+' : '-') << '\n';
  }
}

void write_sgl(std::ostream& out, const std::vector<SignedGraph>& graphs) {
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    if (k > 0) out << '\n';
    write_sgl(out, graphs[k]);
  }
}

std::string to_sgl(const SignedGraph& sg) {
  std::ostringstream out;
  write_sgl(out, sg);
  return out.str();
}

namespace {

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, long long& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::vector<SglRecord> read_sgl(std::istream& in, const std::string& source) {
  std::vector<SglRecord> out;
  std::string raw;
  std::size_t number = 0;

  bool open = false;
  long long n = 0;
  std::size_t header = 0;
  std::vector<SignedEdge> edges;
  std::vector<std::pair<Vertex, Vertex>> seen;

  auto close = [&] {
    if (!open) return;
    out.push_back({SignedGraph(static_cast<int>(n), edges), header});
    open = false;
    edges.clear();
    seen.clear();
  };

  while (std::getline(in, raw)) {
    ++number;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto toks = tokens(line);
    if (!toks.empty() && toks.front().starts_with('#')) continue;
    if (toks.empty()) {
      close();
      continue;
    }
    if (!open) {
      if (toks.size() != 1 || !parse_int(toks[0], n) || n < 0 || n > 1000000) {
        throw ParseError(source, number, "expected a vertex count");
      }
      open = true;
      header = number;
      continue;
    }
    long long u = 0, v = 0;
    if (toks.size() != 3 || !parse_int(toks[0], u) || !parse_int(toks[1], v)) {
      throw ParseError(source, number, "expected `u v s`");
    }
    if (toks[2] != "+" && toks[2] != "-") throw ParseError(source, number, "sign must be + or -");
    if (u < 0 || u >= v || v >= n) {
      throw ParseError(source, number, "edge " + std::to_string(u) + " " + std::to_string(v) +
                                           " needs 0 <= u < v < " + std::to_string(n));
    }
    std::pair<Vertex, Vertex> key{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw ParseError(source, number, "repeated edge " + std::to_string(u) + " " + std::to_string(v));
    }
    seen.push_back(key);
    edges.push_back({key.first, key.second, toks[2] == "+" ? Sign::Positive : Sign::Negative});
  }
  close();
  return out;
}

SignedGraph read_single_sgl(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto records = read_sgl(in);
  if (records.size() != 1) throw InputError("expected exactly one .sgl record, got " + std::to_string(records.size()));
  return records.front().graph;
}

}  // namespace snlab
