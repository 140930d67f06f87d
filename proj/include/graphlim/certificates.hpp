#pragma once

#include "graphlim/classes.hpp"
#include "graphlim/graph.hpp"
#include "graphlim/sampler.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace graphlim {

enum class PrfStatus { NoCompletionInClass, CompletionFound };

struct PrfOutcome {
  PrfStatus status = PrfStatus::NoCompletionInClass;
  // Set iff status == CompletionFound.
  std::vector<Edge> added_part1;
  std::vector<Edge> added_part2;
  std::optional<Graph> completed;
  std::uint64_t nodes_explored = 0;

  // "PRF-HOLDS nodes=<k>" or "COMPLETION <graph6 of completed graph>".
  std::string to_string() const;
};

struct PrfOptions {
  std::uint64_t node_budget = 100'000'000;
};

// Searches for a way to add edges inside the two parts of the bipartite
// graph F so that the result avoids every graph of `family` as an induced
// subgraph. Intra-part pairs are decided in lexicographic order, edge first;
// after each decision every vertex set containing the new pair whose pairs
// are all decided is tested against the family, and the branch is cut on a
// match. NoCompletionInClass therefore means F certifies that the class is
// random-free.
//
// Throws std::invalid_argument if `parts` does not separate F or the family
// is in subgraph mode, and BudgetExhausted when the node budget runs out.
PrfOutcome prf_search(const Graph &f, const Bipartition &parts,
                      const ForbiddenFamily &family, PrfOptions options = {});

// F plus all edges inside part1. The result is always chordal; a violation
// throws std::logic_error.
Graph chordal_clique_completion(const Graph &f, const Bipartition &parts);

// True iff adding a twin of v, with or without the edge to v, stays in the
// class. Requires oracle(g) and v < |g|.
bool ptwin_check(const GraphPredicate &oracle, const Graph &g, Vertex v);

struct TwinCounterexample {
  Graph graph;
  Vertex vertex;
};

// Scans one representative per isomorphism class of members with 1..n_max
// vertices (n_max <= 7), in order of size and canonical form, and returns the
// first (G, v) failing ptwin_check.
std::optional<TwinCounterexample> ptwin_scan(const GraphPredicate &oracle,
                                             std::size_t n_max);

}  // namespace graphlim
