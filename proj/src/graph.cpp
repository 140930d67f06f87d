#include "graphlim/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace graphlim {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

}  // namespace

Graph::Graph(std::size_t n)
    : n_(n), words_(words_for(n)), rows_(n * words_for(n), 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto &e : edges) add_edge(e.u, e.v);
}

Graph Graph::from_code(std::size_t n, std::uint64_t code) {
  if (n > max_code_order)
    throw std::invalid_argument("Graph::from_code: order too large");
  Graph g(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if ((code >> pair_index(i, j)) & 1u) g.add_edge(i, j);
  return g;
}

std::uint64_t Graph::code() const {
  if (n_ > max_code_order)
    throw std::invalid_argument("Graph::code: order too large");
  std::uint64_t c = 0;
  for (Vertex j = 1; j < n_; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (has_edge(i, j)) c |= std::uint64_t{1} << pair_index(i, j);
  return c;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  rows_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::size() const {
  std::size_t total = 0;
  for (auto w : rows_) total += std::popcount(w);
  return total / 2;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    auto bits = r[w];
    while (bits) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

std::strong_ordering operator<=>(const Graph &a, const Graph &b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return a.rows_ <=> b.rows_;
}

bool Bipartition::covers(std::size_t n) const {
  std::vector<int> seen(n, 0);
  for (const auto *part : {&part1, &part2})
    for (Vertex v : *part) {
      if (v >= n || seen[v]) return false;
      seen[v] = 1;
    }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

bool Bipartition::separates(const Graph &g) const {
  if (!covers(g.order())) return false;
  for (const auto *part : {&part1, &part2})
    for (std::size_t i = 0; i < part->size(); ++i)
      for (std::size_t j = i + 1; j < part->size(); ++j)
        if (g.has_edge((*part)[i], (*part)[j])) return false;
  return true;
}

Graph complement(const Graph &g) {
  const auto n = g.order();
  Graph out(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (!g.has_edge(i, j)) out.add_edge(i, j);
  return out;
}

Graph induced_subgraph(const Graph &g, std::span<const Vertex> subset) {
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && s.back() >= g.order())
    throw std::out_of_range("induced_subgraph: vertex out of range");
  Graph out(s.size());
  for (Vertex j = 1; j < s.size(); ++j)
    for (Vertex i = 0; i < j; ++i)
      if (g.has_edge(s[i], s[j])) out.add_edge(i, j);
  return out;
}

Graph add_twin(const Graph &g, Vertex v, bool connect) {
  const auto n = g.order();
  if (v >= n) throw std::out_of_range("add_twin: vertex out of range");
  Graph out(n + 1);
  for (const auto &e : g.edges()) out.add_edge(e.u, e.v);
  const auto twin = static_cast<Vertex>(n);
  for (Vertex u : g.neighbors(v)) out.add_edge(u, twin);
  if (connect) out.add_edge(v, twin);
  return out;
}

Graph relabel(const Graph &g, std::span<const Vertex> perm) {
  if (perm.size() != g.order())
    throw std::invalid_argument("relabel: permutation size mismatch");
  Graph out(g.order());
  for (const auto &e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

bool is_connected(const Graph &g) {
  const auto n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

struct VertexSignature {
  std::size_t degree;
  std::vector<std::size_t> neighbour_degrees;
  friend auto operator<=>(const VertexSignature &,
                          const VertexSignature &) = default;
};

std::vector<VertexSignature> signatures(const Graph &g) {
  std::vector<VertexSignature> sig(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    sig[v].degree = g.degree(v);
    for (Vertex w : g.neighbors(v)) sig[v].neighbour_degrees.push_back(g.degree(w));
    std::sort(sig[v].neighbour_degrees.begin(), sig[v].neighbour_degrees.end());
  }
  return sig;
}

class IsoSearch {
public:
  IsoSearch(const Graph &a, const Graph &b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)),
        map_(a.order()), used_(b.order(), 0) {
    order_.resize(a.order());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    // Highest degree first.
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) {
      return sig_a_[x].degree > sig_a_[y].degree;
    });
  }

  bool run() { return extend(0); }

private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex x = order_[depth];
    for (Vertex y = 0; y < b_.order(); ++y) {
      if (used_[y] || sig_a_[x] != sig_b_[y]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Vertex px = order_[d];
        ok = a_.has_edge(x, px) == b_.has_edge(y, map_[px]);
      }
      if (!ok) continue;
      map_[x] = y;
      used_[y] = 1;
      if (extend(depth + 1)) return true;
      used_[y] = 0;
    }
    return false;
  }

  const Graph &a_;
  const Graph &b_;
  std::vector<VertexSignature> sig_a_, sig_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace

bool is_isomorphic(const Graph &a, const Graph &b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto sa = signatures(a), sb = signatures(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return IsoSearch(a, b).run();
}

// ---------------------------------------------------------------------------
// Canonical form: branch and bound over positions. Placing vertex perm[p] at
// position p fixes column p of the bit-string (pairs (i,p), i<p), so columns
// are compared one at a time against the best string found so far.

namespace {

class CanonSearch {
public:
  explicit CanonSearch(const Graph &g)
      : g_(g), n_(g.order()), perm_(n_), used_(n_, 0), cols_(n_, 0),
        best_cols_(n_, 0), best_perm_(n_), twins_(n_ * n_, 0) {
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = a + 1; b < n_; ++b) {
        bool same = true;
        for (Vertex x = 0; x < n_ && same; ++x)
          if (x != a && x != b) same = g.has_edge(a, x) == g.has_edge(b, x);
        twins_[a * n_ + b] = twins_[b * n_ + a] = same;
      }
  }

  void run() {
    if (n_ == 0) return;
    extend(0, false);
  }

  const std::vector<Vertex> &best_perm() const { return best_perm_; }

private:
  // Bit for row i is placed at (p-1-i) so that integer order on a column
  // matches lexicographic order of its bits.
  std::uint64_t column(std::size_t p, Vertex candidate) const {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < p; ++i)
      if (g_.has_edge(perm_[i], candidate)) c |= std::uint64_t{1} << (p - 1 - i);
    return c;
  }

  // `below` means the current prefix is already strictly smaller than best.
  void extend(std::size_t p, bool below) {
    if (p == n_) {
      if (!have_best_ || below) {
        best_cols_ = cols_;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      // Swapping two twins is an automorphism that fixes the prefix, so their
      // subtrees produce the same strings.
      if (std::any_of(tried.begin(), tried.end(),
                      [&](Vertex t) { return twins_[t * n_ + v]; }))
        continue;
      tried.push_back(v);
      const auto c = column(p, v);
      bool next_below = below;
      if (have_best_ && !below) {
        if (c > best_cols_[p]) continue;
        next_below = c < best_cols_[p];
      }
      perm_[p] = v;
      cols_[p] = c;
      used_[v] = 1;
      extend(p + 1, next_below);
      used_[v] = 0;
      // A new best may have been recorded below this node; the running prefix
      // is then equal to it, not below it.
      if (next_below && have_best_) below = false;
    }
  }

  const Graph &g_;
  std::size_t n_;
  std::vector<Vertex> perm_;
  std::vector<char> used_;
  std::vector<std::uint64_t> cols_;
  std::vector<std::uint64_t> best_cols_;
  std::vector<Vertex> best_perm_;
  std::vector<char> twins_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const Graph &g) {
  CanonSearch search(g);
  search.run();
  const auto &order = search.best_perm();  // position -> original vertex
  std::vector<Vertex> relabelling(g.order());
  for (Vertex p = 0; p < g.order(); ++p) relabelling[order[p]] = p;

  CanonicalForm cf;
  cf.n = g.order();
  cf.graph = relabel(g, relabelling);
  cf.bits.reserve(pair_count(cf.n));
  for (Vertex j = 1; j < cf.n; ++j)
    for (Vertex i = 0; i < j; ++i) cf.bits.push_back(cf.graph.has_edge(i, j));
  return cf;
}

std::strong_ordering operator<=>(const CanonicalForm &a,
                                 const CanonicalForm &b) {
  if (auto c = a.n <=> b.n; c != 0) return c;
  return a.bits <=> b.bits;
}

LabelledGraphs::LabelledGraphs(std::size_t n) : n_(n) {
  const auto pairs = pair_count(n);
  if (n > Graph::max_code_order || pairs >= 63)
    throw std::invalid_argument("enumerate_labelled: order too large");
  count_ = std::uint64_t{1} << pairs;
}

std::vector<Graph> enumerate_unlabelled(std::size_t n) {
  std::vector<Graph> reps{Graph(0)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::set<CanonicalForm> seen;
    const auto new_vertex = static_cast<Vertex>(m - 1);
    for (const auto &base : reps) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        Graph g(m);
        for (const auto &e : base.edges()) g.add_edge(e.u, e.v);
        for (Vertex u = 0; u < new_vertex; ++u)
          if ((mask >> u) & 1u) g.add_edge(u, new_vertex);
        seen.insert(canonical_form(g));
      }
    }
    reps.clear();
    for (const auto &cf : seen) reps.push_back(cf.graph);
  }
  return reps;
}

}  // namespace graphlim
