#pragma once

#include "graphlim/graph.hpp"
#include "graphlim/rational.hpp"

namespace graphlim {

// Counts of maps V(F) -> V(G):
//   hom: edges go to edges
//   inj: injective, edges go to edges
//   ind: injective, edges go to edges and non-edges to non-edges
BigInt hom_count(const Graph &f, const Graph &g);
BigInt inj_count(const Graph &f, const Graph &g);
BigInt ind_count(const Graph &f, const Graph &g);

// t(F,G) = hom / n^k. With n = 0 the value is 1 for the empty F and 0
// otherwise.
Rational hom_density(const Graph &f, const Graph &g);
// t_inj(F,G) = inj / (n)_k and t_ind(F,G) = ind / (n)_k; both are 0 when
// |F| > |G|.
Rational inj_density(const Graph &f, const Graph &g);
Rational ind_density(const Graph &f, const Graph &g);

// Stops at the first embedding.
bool has_induced(const Graph &f, const Graph &g);
bool has_subgraph(const Graph &f, const Graph &g);

// Processing order for the vertices of a pattern graph: each vertex after the
// first has as many already-placed neighbours as possible.
std::vector<Vertex> search_order(const Graph &f);

}  // namespace graphlim
