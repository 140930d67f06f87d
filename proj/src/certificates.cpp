#include "graphlim/certificates.hpp"

#include "graphlim/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace graphlim {

std::string PrfOutcome::to_string() const {
  if (status == PrfStatus::NoCompletionInClass)
    return "PRF-HOLDS nodes=" + std::to_string(nodes_explored);
  return "COMPLETION " + to_graph6(*completed);
}

namespace {

// Matches labelled graphs against one forbidden graph. Small patterns keep
// the codes of all their labelled copies; larger ones fall back to
// is_isomorphic after cheap invariants.
class Pattern {
public:
  static constexpr std::size_t kTabulateLimit = 7;

  explicit Pattern(Graph h) : h_(std::move(h)), edges_(h_.size()) {
    for (Vertex v = 0; v < h_.order(); ++v) degrees_.push_back(h_.degree(v));
    std::sort(degrees_.begin(), degrees_.end());
    if (h_.order() <= kTabulateLimit) {
      std::vector<Vertex> perm(h_.order());
      std::iota(perm.begin(), perm.end(), Vertex{0});
      do {
        codes_.insert(relabel(h_, perm).code());
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  std::size_t order() const { return h_.order(); }

  bool matches(const Graph &g) const {
    if (g.order() != h_.order() || g.size() != edges_) return false;
    if (h_.order() <= kTabulateLimit) return codes_.count(g.code()) > 0;
    std::vector<std::size_t> deg;
    for (Vertex v = 0; v < g.order(); ++v) deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end());
    return deg == degrees_ && is_isomorphic(g, h_);
  }

private:
  Graph h_;
  std::size_t edges_;
  std::vector<std::size_t> degrees_;
  std::unordered_set<std::uint64_t> codes_;
};

class PrfSearch {
public:
  PrfSearch(const Graph &f, const Bipartition &parts, const ForbiddenFamily &family,
            PrfOptions options)
      : n_(f.order()), current_(f), decided_(n_ * n_, 1), options_(options) {
    for (const auto &h : family.expand(n_))
      if (h.order() <= n_) patterns_.emplace_back(h);
    for (const auto *part : {&parts.part1, &parts.part2}) {
      for (std::size_t i = 0; i < part->size(); ++i)
        for (std::size_t j = i + 1; j < part->size(); ++j) {
          auto a = (*part)[i], b = (*part)[j];
          if (a > b) std::swap(a, b);
          pairs_.push_back({a, b});
          decided_[a * n_ + b] = decided_[b * n_ + a] = 0;
        }
    }
    std::sort(pairs_.begin(), pairs_.end());
    in_part1_.assign(n_, 0);
    for (Vertex v : parts.part1) in_part1_[v] = 1;
    family_ = family;
  }

  PrfOutcome run() {
    PrfOutcome outcome;
    if (!contains_forbidden({}) && extend(0)) {
      outcome.status = PrfStatus::CompletionFound;
      outcome.completed = current_;
      for (const auto &p : pairs_)
        if (current_.has_edge(p.u, p.v))
          (in_part1_[p.u] ? outcome.added_part1 : outcome.added_part2).push_back(p);
    }
    outcome.nodes_explored = nodes_;
    return outcome;
  }

private:
  bool decided(Vertex a, Vertex b) const { return decided_[a * n_ + b] != 0; }

  // Looks for a fully decided vertex set that contains `chosen` and
  // induces a forbidden graph.
  bool contains_forbidden(std::vector<Vertex> chosen) const {
    for (const auto &pattern : patterns_)
      if (pattern.order() >= chosen.size() && grow(chosen, 0, pattern)) return true;
    return false;
  }

  bool grow(std::vector<Vertex> &chosen, Vertex from, const Pattern &pattern) const {
    if (chosen.size() == pattern.order())
      return pattern.matches(induced_subgraph_in_order(chosen));
    for (Vertex w = from; w < n_; ++w) {
      if (std::find(chosen.begin(), chosen.end(), w) != chosen.end()) continue;
      bool ok = true;
      for (Vertex x : chosen)
        if (!decided(w, x)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(w);
      const bool hit = grow(chosen, w + 1, pattern);
      chosen.pop_back();
      if (hit) return true;
    }
    return false;
  }

  Graph induced_subgraph_in_order(const std::vector<Vertex> &vs) const {
    Graph out(vs.size());
    for (Vertex j = 1; j < vs.size(); ++j)
      for (Vertex i = 0; i < j; ++i)
        if (current_.has_edge(vs[i], vs[j])) out.add_edge(i, j);
    return out;
  }

  bool extend(std::size_t index) {
    if (index == pairs_.size()) return avoids_family(current_, family_);
    const auto [a, b] = pairs_[index];
    for (bool edge : {true, false}) {
      if (++nodes_ > options_.node_budget)
        throw BudgetExhausted("prf_search: node budget of " +
                              std::to_string(options_.node_budget) + " exhausted");
      if (edge) current_.add_edge(a, b);
      decided_[a * n_ + b] = decided_[b * n_ + a] = 1;
      if (!contains_forbidden({a, b}) && extend(index + 1)) return true;
      decided_[a * n_ + b] = decided_[b * n_ + a] = 0;
      if (edge) current_.remove_edge(a, b);
    }
    return false;
  }

  std::size_t n_;
  Graph current_;
  std::vector<char> decided_;
  std::vector<char> in_part1_;
  std::vector<Edge> pairs_;
  std::vector<Pattern> patterns_;
  ForbiddenFamily family_;
  PrfOptions options_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

PrfOutcome prf_search(const Graph &f, const Bipartition &parts,
                      const ForbiddenFamily &family, PrfOptions options) {
  family.validate();
  if (family.mode != ContainmentMode::Induced)
    throw std::invalid_argument("prf_search: family must be given in induced mode");
  if (!parts.separates(f))
    throw std::invalid_argument("prf_search: graph is not bipartite with the given parts");
  return PrfSearch(f, parts, family, options).run();
}

Graph chordal_clique_completion(const Graph &f, const Bipartition &parts) {
  if (!parts.separates(f))
    throw std::invalid_argument(
        "chordal_clique_completion: graph is not bipartite with the given parts");
  Graph out = f;
  for (std::size_t i = 0; i < parts.part1.size(); ++i)
    for (std::size_t j = i + 1; j < parts.part1.size(); ++j)
      out.add_edge(parts.part1[i], parts.part1[j]);
  if (!is_chordal(out))
    throw std::logic_error("chordal_clique_completion: result is not chordal");
  return out;
}

bool ptwin_check(const GraphPredicate &oracle, const Graph &g, Vertex v) {
  if (v >= g.order()) throw std::out_of_range("ptwin_check: vertex out of range");
  if (!oracle(g)) throw std::invalid_argument("ptwin_check: graph is not in the class");
  return oracle(add_twin(g, v, false)) || oracle(add_twin(g, v, true));
}

std::optional<TwinCounterexample> ptwin_scan(const GraphPredicate &oracle,
                                             std::size_t n_max) {
  if (n_max > 7) throw std::invalid_argument("ptwin_scan: n_max must be <= 7");
  for (std::size_t n = 1; n <= n_max; ++n)
    for (const auto &g : enumerate_unlabelled(n)) {
      if (!oracle(g)) continue;
      for (Vertex v = 0; v < n; ++v)
        if (!ptwin_check(oracle, g, v)) return TwinCounterexample{g, v};
    }
  return std::nullopt;
}

}  // namespace graphlim
