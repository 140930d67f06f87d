#include "graphlim/errors.hpp"
#include "graphlim/graph.hpp"

#include <charconv>
#include <set>
#include <string>

namespace graphlim {

namespace {

constexpr std::size_t kSmallOrderLimit = 62;
constexpr std::size_t kMediumOrderLimit = 258047;

std::string_view strip_one_newline(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  return text;
}

int graph6_value(char ch) {
  const auto c = static_cast<unsigned char>(ch);
  if (c < 63 || c > 126)
    throw ParseError("graph6: character out of range");
  return c - 63;
}

}  // namespace

std::string to_graph6(const Graph &g) {
  const auto n = g.order();
  std::string out;
  if (n <= kSmallOrderLimit) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= kMediumOrderLimit) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw std::invalid_argument("graph6: order too large");
  }

  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = strip_one_newline(text);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = static_cast<std::size_t>(graph6_value(text[0]));
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError("graph6: orders above 258047 are not supported");
    if (text.size() < 4) throw ParseError("graph6: truncated header");
    for (std::size_t k = 1; k <= 3; ++k)
      n = (n << 6) | static_cast<std::size_t>(graph6_value(text[k]));
    if (n <= kSmallOrderLimit)
      throw ParseError("graph6: non-minimal order header");
    pos = 4;
  }

  const auto bits = pair_count(n);
  const auto expected = (bits + 5) / 6;
  if (text.size() - pos != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) +
                     " data bytes, got " + std::to_string(text.size() - pos));

  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t k = pos; k < text.size(); ++k) {
    const int value = graph6_value(text[k]);
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (value >> b) & 1;
      if (bit >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bits");
        continue;
      }
      if (!set) continue;
      // Column order: bit index -> (i, j) with j*(j-1)/2 + i == bit.
      std::size_t j = 1;
      while (pair_index(0, j + 1) <= bit) ++j;
      g.add_edge(static_cast<Vertex>(bit - pair_index(0, j)),
                 static_cast<Vertex>(j));
    }
  }
  return g;
}

std::string to_edge_list(const Graph &g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto &e : edges)
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

namespace {

// Parses "a b" with exactly one space and decimal digits only.
std::pair<std::size_t, std::size_t> parse_pair_line(std::string_view line,
                                                    std::size_t line_no) {
  const auto fail = [&](const char *what) {
    return ParseError("edge list line " + std::to_string(line_no) + ": " + what);
  };
  const auto space = line.find(' ');
  if (space == std::string_view::npos) throw fail("expected two integers");
  auto parse_one = [&](std::string_view tok) {
    if (tok.empty()) throw fail("empty field");
    for (char c : tok)
      if (c < '0' || c > '9') throw fail("non-digit character");
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw fail("integer out of range");
    return value;
  };
  return {parse_one(line.substr(0, space)), parse_one(line.substr(space + 1))};
}

}  // namespace

Graph from_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("edge list: empty input");

  const auto [n, m] = parse_pair_line(lines[0], 1);
  if (lines.size() != m + 1)
    throw ParseError("edge list: header declares " + std::to_string(m) +
                     " edges but " + std::to_string(lines.size() - 1) +
                     " lines follow");

  Graph g(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [u, v] = parse_pair_line(lines[k], k + 1);
    if (!(u < v && v < n))
      throw ParseError("edge list line " + std::to_string(k + 1) +
                       ": require u < v < n");
    if (!seen.insert({u, v}).second)
      throw ParseError("edge list line " + std::to_string(k + 1) +
                       ": duplicate edge");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

}  // namespace graphlim
