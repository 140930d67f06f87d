#include "graphlim/errors.hpp"
#include "graphlim/graph.hpp"

#include <string>

namespace graphlim {

Graph path_graph(std::size_t k) {
  Graph g(k);
  for (Vertex i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(k);
  g.add_edge(0, static_cast<Vertex>(k - 1));
  return g;
}

Graph complete_graph(std::size_t k) {
  Graph g(k);
  for (Vertex j = 1; j < k; ++j)
    for (Vertex i = 0; i < j; ++i) g.add_edge(i, j);
  return g;
}

namespace {

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// Net: triangle {0,1,2} with pendants 3,4,5.
Graph s3_graph() { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}); }

// Bipartite cograph certificate. Letters map as A..F -> 0..5, a..f -> 6..11.
NamedGraph f12_certificate() {
  constexpr Vertex A = 0, B = 1, C = 2, D = 3, E = 4, F = 5;
  constexpr Vertex a = 6, b = 7, c = 8, d = 9, e = 10, f = 11;
  Graph g(12, {{A, b}, {B, b}, {C, c}, {D, d}, {E, e}, {F, f}, {A, c},
               {B, d}, {A, e}, {B, f}, {C, a}, {C, b}, {D, b}, {F, a}});
  Bipartition parts{{A, B, C, D, E, F}, {a, b, c, d, e, f}};
  return {std::move(g), std::move(parts)};
}

std::size_t single_param(std::string_view name, std::span<const int> params,
                         int minimum) {
  if (params.size() != 1)
    throw std::invalid_argument(std::string(name) + " takes one integer parameter");
  if (params[0] < minimum)
    throw std::invalid_argument(std::string(name) + " parameter must be >= " +
                                std::to_string(minimum));
  return static_cast<std::size_t>(params[0]);
}

void no_params(std::string_view name, std::span<const int> params) {
  if (!params.empty())
    throw std::invalid_argument(std::string(name) + " takes no parameters");
}

}  // namespace

NamedGraph make_named(std::string_view name, std::span<const int> params) {
  if (name == "path") return {path_graph(single_param(name, params, 1)), {}};
  if (name == "cycle") return {cycle_graph(single_param(name, params, 3)), {}};
  if (name == "complete")
    return {complete_graph(single_param(name, params, 1)), {}};
  if (name == "empty") return {Graph(single_param(name, params, 0)), {}};
  if (name == "star") return {star_graph(single_param(name, params, 1)), {}};
  if (name == "2K2") {
    no_params(name, params);
    return {Graph(4, {{0, 1}, {2, 3}}), {}};
  }
  if (name == "K13") {
    no_params(name, params);
    return {star_graph(3), {}};
  }
  if (name == "S3") {
    no_params(name, params);
    return {s3_graph(), {}};
  }
  if (name == "S3_complement") {
    no_params(name, params);
    return {complement(s3_graph()), {}};
  }
  if (name == "cograph_certificate_F12" || name == "F12") {
    no_params(name, params);
    return f12_certificate();
  }
  throw UnknownName(std::string(name));
}

std::vector<std::string> catalog_graph_names() {
  return {"path k",  "cycle k", "complete k",    "empty k",
          "star k",  "2K2",     "K13",           "S3",
          "S3_complement", "cograph_certificate_F12 (alias F12)"};
}

}  // namespace graphlim
