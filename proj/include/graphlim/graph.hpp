#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace graphlim {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

// Finite simple graph on vertices 0..n-1. Adjacency is kept as one bitset row
// per vertex so that neighbourhood intersections in the counting kernels are
// word operations.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Duplicate edges collapse; loops and out-of-range endpoints throw
  // std::invalid_argument.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Graph whose pair (i,j), i<j, is present iff bit pair_index(i,j) of `code`
  // is set. Requires n <= max_code_order.
  static Graph from_code(std::size_t n, std::uint64_t code);
  static constexpr std::size_t max_code_order = 11;

  std::size_t order() const { return n_; }
  std::size_t size() const;

  bool has_edge(Vertex u, Vertex v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  std::uint64_t code() const;

  friend bool operator==(const Graph &, const Graph &) = default;
  friend std::strong_ordering operator<=>(const Graph &a, const Graph &b);

private:
  void check_pair(Vertex u, Vertex v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Index of the pair (i,j), i<j, in column order (0,1),(0,2),(1,2),(0,3),...
constexpr std::size_t pair_index(std::size_t i, std::size_t j) {
  return j * (j - 1) / 2 + i;
}

constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Vertex split used by bipartite certificates.
struct Bipartition {
  std::vector<Vertex> part1;
  std::vector<Vertex> part2;

  // True when the parts cover 0..n-1 exactly once.
  bool covers(std::size_t n) const;
  // covers(g.order()) and no edge lies inside a part.
  bool separates(const Graph &g) const;
};

// Lexicographically smallest adjacency bit-string over all relabellings,
// together with one relabelling that attains it.
struct CanonicalForm {
  std::size_t n = 0;
  std::vector<bool> bits;  // column order, see pair_index
  Graph graph;

  friend bool operator==(const CanonicalForm &a, const CanonicalForm &b) {
    return a.n == b.n && a.bits == b.bits;
  }
  friend std::strong_ordering operator<=>(const CanonicalForm &a,
                                          const CanonicalForm &b);
};

Graph complement(const Graph &g);

// Order-preserving relabelling of `subset` to 0..|S|-1. Duplicates are
// ignored; out-of-range vertices throw std::out_of_range.
Graph induced_subgraph(const Graph &g, std::span<const Vertex> subset);

// Appends vertex n with the neighbourhood of v, plus the edge {v,n} when
// `connect` is set.
Graph add_twin(const Graph &g, Vertex v, bool connect);

// Applies a relabelling: vertex i of g becomes perm[i].
Graph relabel(const Graph &g, std::span<const Vertex> perm);

// Brute-force search with degree and neighbour-degree pruning. Intended for
// graphs up to about 10 vertices.
bool is_isomorphic(const Graph &a, const Graph &b);
CanonicalForm canonical_form(const Graph &g);

bool is_connected(const Graph &g);

// All 2^(n(n-1)/2) labelled graphs on n vertices in increasing code order.
class LabelledGraphs {
public:
  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using pointer = const Graph *;
    using reference = Graph;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t code) : n_(n), code_(code) {}
    Graph operator*() const { return Graph::from_code(n_, code_); }
    iterator &operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++code_;
      return copy;
    }
    friend bool operator==(const iterator &, const iterator &) = default;

  private:
    std::size_t n_ = 0;
    std::uint64_t code_ = 0;
  };

  explicit LabelledGraphs(std::size_t n);
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }
  std::uint64_t count() const { return count_; }

private:
  std::size_t n_;
  std::uint64_t count_;
};

inline LabelledGraphs enumerate_labelled(std::size_t n) {
  return LabelledGraphs(n);
}

// One canonical representative per isomorphism class on n vertices, sorted by
// canonical bit-string. Built by vertex extension of the (n-1)-vertex list.
std::vector<Graph> enumerate_unlabelled(std::size_t n);

// ---------------------------------------------------------------------------
// Named graphs, all with 0-indexed labels:
//   S3:  edges {01,02,12,03,14,25}
//   cograph_certificate_F12: A..F -> 0..5 (part1), a..f -> 6..11 (part2).
// path k, cycle k, complete k, empty k take k vertices; star k is K_{1,k}
// with centre 0.

struct NamedGraph {
  Graph graph;
  std::optional<Bipartition> parts;
};

NamedGraph make_named(std::string_view name, std::span<const int> params = {});
std::vector<std::string> catalog_graph_names();

Graph path_graph(std::size_t k);
Graph cycle_graph(std::size_t k);
Graph complete_graph(std::size_t k);

// ---------------------------------------------------------------------------
// Text formats.

std::string to_graph6(const Graph &g);
Graph from_graph6(std::string_view text);

// "n m\n" followed by m lines "u v\n" with u < v, sorted.
std::string to_edge_list(const Graph &g);
Graph from_edge_list(std::string_view text);

}  // namespace graphlim
