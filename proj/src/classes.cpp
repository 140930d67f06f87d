#include "graphlim/classes.hpp"

#include "graphlim/densities.hpp"
#include "graphlim/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace graphlim {

void ForbiddenFamily::validate() const {
  if (members.empty() && !cycle_min)
    throw std::invalid_argument("forbidden family is empty");
  if (cycle_min) {
    if (*cycle_min < 3) throw std::invalid_argument("cycle family needs cycle_min >= 3");
    if (truncation < *cycle_min)
      throw std::invalid_argument("truncation must be >= cycle_min");
  }
}

std::vector<std::size_t> ForbiddenFamily::cycle_lengths(std::size_t limit) const {
  std::vector<std::size_t> out;
  if (!cycle_min) return out;
  const auto top = std::min(truncation, limit);
  for (auto k = *cycle_min; k <= top; ++k)
    if (cycle_parity == CycleParity::All || k % 2 == 1) out.push_back(k);
  return out;
}

std::vector<Graph> ForbiddenFamily::expand(std::size_t limit) const {
  std::vector<Graph> out = members;
  for (auto k : cycle_lengths(limit)) out.push_back(cycle_graph(k));
  return out;
}

bool avoids_family(const Graph &g, const ForbiddenFamily &family) {
  for (const auto &h : family.expand(g.order())) {
    const bool found = family.mode == ContainmentMode::Induced ? has_induced(h, g)
                                                               : has_subgraph(h, g);
    if (found) return false;
  }
  return true;
}

namespace {

ForbiddenFamily finite_family(std::vector<Graph> members) {
  ForbiddenFamily f;
  f.members = std::move(members);
  return f;
}

}  // namespace

ForbiddenFamily threshold_family() {
  return finite_family({make_named("2K2").graph, path_graph(4), cycle_graph(4)});
}

ForbiddenFamily cograph_family() { return finite_family({path_graph(4)}); }

ForbiddenFamily chordal_family(std::size_t truncation) {
  ForbiddenFamily f;
  f.cycle_min = 4;
  f.truncation = truncation;
  f.validate();
  return f;
}

ForbiddenFamily triangle_free_family() { return finite_family({complete_graph(3)}); }

ForbiddenFamily bipartite_family(std::size_t truncation) {
  ForbiddenFamily f;
  f.cycle_min = 3;
  f.cycle_parity = CycleParity::Odd;
  f.mode = ContainmentMode::Subgraph;
  f.truncation = truncation;
  f.validate();
  return f;
}

ForbiddenFamily unit_interval_family(std::size_t truncation) {
  ForbiddenFamily f;
  f.members = {make_named("K13").graph, make_named("S3").graph,
               make_named("S3_complement").graph};
  f.cycle_min = 4;
  f.truncation = truncation;
  f.validate();
  return f;
}

// ---------------------------------------------------------------------------

bool is_threshold(const Graph &g) {
  // Strip isolated or dominating vertices until none remain.
  const auto n = g.order();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  for (std::size_t remaining = n; remaining > 0; --remaining) {
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < n && !found; ++v)
      if (alive[v] && (degree[v] == 0 || degree[v] + 1 == remaining)) {
        pick = v;
        found = true;
      }
    if (!found) return false;
    alive[pick] = 0;
    for (Vertex w : g.neighbors(pick))
      if (alive[w]) --degree[w];
  }
  return true;
}

std::vector<Vertex> maximum_cardinality_search(const Graph &g) {
  const auto n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    bool have = false;
    for (Vertex v = 0; v < n; ++v)
      if (!visited[v] && (!have || weight[v] > weight[best])) {
        best = v;
        have = true;
      }
    visited[best] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!visited[w]) ++weight[w];
  }
  return order;
}

bool is_perfect_elimination_ordering(const Graph &g, std::span<const Vertex> order) {
  const auto n = g.order();
  if (order.size() != n) return false;
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(order[i]))
      if (position[w] > i) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return false;
  }
  return true;
}

bool is_chordal(const Graph &g) {
  auto order = maximum_cardinality_search(g);
  std::reverse(order.begin(), order.end());
  return is_perfect_elimination_ordering(g, order);
}

bool is_cograph(const Graph &g) { return !has_induced(path_graph(4), g); }

bool has_asteroidal_triple(const Graph &g) {
  const auto n = g.order();
  // component[z][v]: component id of v in G - N[z], or -1 inside N[z].
  std::vector<std::vector<int>> component(n, std::vector<int>(n, -1));
  for (Vertex z = 0; z < n; ++z) {
    auto &comp = component[z];
    std::vector<char> blocked(n, 0);
    blocked[z] = 1;
    for (Vertex w : g.neighbors(z)) blocked[w] = 1;
    int next_id = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (blocked[s] || comp[s] >= 0) continue;
      std::vector<Vertex> stack{s};
      comp[s] = next_id;
      while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u))
          if (!blocked[w] && comp[w] < 0) {
            comp[w] = next_id;
            stack.push_back(w);
          }
      }
      ++next_id;
    }
  }
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.has_edge(x, y)) continue;
      for (Vertex z = y + 1; z < n; ++z) {
        if (g.has_edge(x, z) || g.has_edge(y, z)) continue;
        if (component[z][x] == component[z][y] && component[y][x] == component[y][z] &&
            component[x][y] == component[x][z])
          return true;
      }
    }
  return false;
}

bool is_interval(const Graph &g) { return is_chordal(g) && !has_asteroidal_triple(g); }

bool is_unit_interval(const Graph &g) {
  return is_interval(g) && !has_induced(make_named("K13").graph, g);
}

bool is_bipartite(const Graph &g) {
  const auto n = g.order();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_triangle_free(const Graph &g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      auto ru = g.row(u), rv = g.row(v);
      for (std::size_t w = 0; w < ru.size(); ++w)
        if (ru[w] & rv[w]) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------

ClassSpec class_spec(std::string_view name) {
  if (name == "threshold") return {"threshold", is_threshold, threshold_family()};
  if (name == "chordal") return {"chordal", is_chordal, chordal_family()};
  if (name == "cograph") return {"cograph", is_cograph, cograph_family()};
  if (name == "interval") return {"interval", is_interval, std::nullopt};
  if (name == "unit_interval")
    return {"unit_interval", is_unit_interval, unit_interval_family()};
  if (name == "bipartite") return {"bipartite", is_bipartite, bipartite_family()};
  if (name == "triangle_free")
    return {"triangle_free", is_triangle_free, triangle_free_family()};
  throw UnknownName(std::string(name));
}

bool is_member(std::string_view class_name, const Graph &g) {
  return class_spec(class_name).oracle(g);
}

std::vector<std::string> class_names() {
  return {"threshold", "chordal",   "cograph",      "interval",
          "unit_interval", "bipartite", "triangle_free"};
}

}  // namespace graphlim
