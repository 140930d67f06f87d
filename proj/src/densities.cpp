#include "graphlim/densities.hpp"

#include <algorithm>
#include <bit>

namespace graphlim {

std::vector<Vertex> search_order(const Graph &f) {
  const auto k = f.order();
  std::vector<Vertex> order;
  std::vector<char> placed(k, 0);
  std::vector<std::size_t> links(k, 0);
  for (std::size_t step = 0; step < k; ++step) {
    Vertex best = 0;
    bool have = false;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      if (!have || links[v] > links[best] ||
          (links[v] == links[best] && f.degree(v) > f.degree(best))) {
        best = v;
        have = true;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : f.neighbors(best)) ++links[w];
  }
  return order;
}

namespace {

__extension__ using Wide = unsigned __int128;

enum class MapKind { Hom, Inj, Ind };

// Depth-first extension of partial maps, one pattern vertex per level, with
// candidate sets maintained as bitsets over V(G).
class EmbeddingCounter {
public:
  EmbeddingCounter(const Graph &f, const Graph &g, MapKind kind, bool first_only)
      : g_(g), kind_(kind), first_only_(first_only), order_(search_order(f)),
        words_(g.words_per_row()), image_(f.order()),
        used_(words_, 0), scratch_(f.order() * words_, 0) {
    const auto k = f.order();
    std::vector<std::size_t> position(k);
    for (std::size_t p = 0; p < k; ++p) position[order_[p]] = p;
    adjacent_.resize(k);
    non_adjacent_.resize(k);
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < p; ++q) {
        if (f.has_edge(order_[p], order_[q]))
          adjacent_[p].push_back(q);
        else
          non_adjacent_[p].push_back(q);
      }
    full_.assign(words_, ~std::uint64_t{0});
    if (g.order() % 64 != 0 && words_ > 0)
      full_.back() = (std::uint64_t{1} << (g.order() % 64)) - 1;
  }

  Wide run() {
    if (order_.empty()) return 1;
    extend(0);
    return total_;
  }

private:
  void extend(std::size_t p) {
    std::uint64_t *cand = scratch_.data() + p * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      cand[w] = full_[w];
      if (kind_ != MapKind::Hom) cand[w] &= ~used_[w];
    }
    for (auto q : adjacent_[p]) {
      auto r = g_.row(image_[q]);
      for (std::size_t w = 0; w < words_; ++w) cand[w] &= r[w];
    }
    if (kind_ == MapKind::Ind)
      for (auto q : non_adjacent_[p]) {
        auto r = g_.row(image_[q]);
        for (std::size_t w = 0; w < words_; ++w) cand[w] &= ~r[w];
      }

    if (p + 1 == order_.size()) {
      for (std::size_t w = 0; w < words_; ++w) total_ += std::popcount(cand[w]);
      if (first_only_ && total_ > 0) done_ = true;
      return;
    }
    for (std::size_t w = 0; w < words_ && !done_; ++w) {
      auto bits = cand[w];
      while (bits && !done_) {
        const auto bit = std::countr_zero(bits);
        bits &= bits - 1;
        const auto v = static_cast<Vertex>(w * 64 + bit);
        image_[p] = v;
        used_[w] |= std::uint64_t{1} << bit;
        extend(p + 1);
        used_[w] &= ~(std::uint64_t{1} << bit);
      }
    }
  }

  const Graph &g_;
  MapKind kind_;
  bool first_only_;
  std::vector<Vertex> order_;
  std::size_t words_;
  std::vector<Vertex> image_;
  std::vector<std::uint64_t> used_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint64_t> full_;
  std::vector<std::vector<std::size_t>> adjacent_;
  std::vector<std::vector<std::size_t>> non_adjacent_;
  Wide total_ = 0;
  bool done_ = false;
};

BigInt to_bigint(Wide v) {
  BigInt out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

BigInt count(const Graph &f, const Graph &g, MapKind kind) {
  if (kind != MapKind::Hom && f.order() > g.order()) return 0;
  if (f.order() > 0 && g.order() == 0) return 0;
  return to_bigint(EmbeddingCounter(f, g, kind, false).run());
}

BigInt power(std::size_t base, std::size_t exp) {
  BigInt out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= static_cast<unsigned long long>(base);
  return out;
}

}  // namespace

BigInt hom_count(const Graph &f, const Graph &g) { return count(f, g, MapKind::Hom); }
BigInt inj_count(const Graph &f, const Graph &g) { return count(f, g, MapKind::Inj); }
BigInt ind_count(const Graph &f, const Graph &g) { return count(f, g, MapKind::Ind); }

Rational hom_density(const Graph &f, const Graph &g) {
  if (g.order() == 0) return f.order() == 0 ? 1 : 0;
  return Rational(hom_count(f, g), power(g.order(), f.order()));
}

Rational inj_density(const Graph &f, const Graph &g) {
  if (f.order() > g.order()) return 0;
  return Rational(inj_count(f, g), falling_factorial(g.order(), f.order()));
}

Rational ind_density(const Graph &f, const Graph &g) {
  if (f.order() > g.order()) return 0;
  return Rational(ind_count(f, g), falling_factorial(g.order(), f.order()));
}

bool has_induced(const Graph &f, const Graph &g) {
  if (f.order() > g.order()) return false;
  return EmbeddingCounter(f, g, MapKind::Ind, true).run() > 0;
}

bool has_subgraph(const Graph &f, const Graph &g) {
  if (f.order() > g.order()) return false;
  return EmbeddingCounter(f, g, MapKind::Inj, true).run() > 0;
}

}  // namespace graphlim
