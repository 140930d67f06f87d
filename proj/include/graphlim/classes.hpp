#pragma once

#include "graphlim/graph.hpp"
#include "graphlim/sampler.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace graphlim {

enum class ContainmentMode { Induced, Subgraph };
enum class CycleParity { All, Odd };

// Finite list of forbidden graphs, optionally followed by the infinite tail
// {C_k : k >= cycle_min} (odd k only for CycleParity::Odd). The tail is
// checked up to `truncation`.
struct ForbiddenFamily {
  std::vector<Graph> members;
  std::optional<std::size_t> cycle_min;
  CycleParity cycle_parity = CycleParity::All;
  ContainmentMode mode = ContainmentMode::Induced;
  std::size_t truncation = 8;

  bool is_infinite() const { return cycle_min.has_value(); }
  // Throws std::invalid_argument on an empty family or truncation < cycle_min.
  void validate() const;
  // Cycle lengths of the tail in [cycle_min, min(truncation, limit)].
  std::vector<std::size_t> cycle_lengths(std::size_t limit) const;
  // Members followed by the tail cycles up to `limit` vertices.
  std::vector<Graph> expand(std::size_t limit) const;
};

// G lies in U_F (induced mode) or U*_F (subgraph mode). Tail cycles are
// checked for lengths up to min(truncation, |G|).
bool avoids_family(const Graph &g, const ForbiddenFamily &family);

// Standard families.
ForbiddenFamily threshold_family();          // {2K2, P4, C4}
ForbiddenFamily cograph_family();            // {P4}
ForbiddenFamily chordal_family(std::size_t truncation = 8);  // C_k, k >= 4
ForbiddenFamily triangle_free_family();      // {K3}
ForbiddenFamily bipartite_family(std::size_t truncation = 9);  // odd cycles, subgraph mode
// C_k (k >= 4), K_{1,3}, S3 and its complement.
ForbiddenFamily unit_interval_family(std::size_t truncation = 8);

bool is_threshold(const Graph &g);
bool is_chordal(const Graph &g);
bool is_cograph(const Graph &g);
bool is_interval(const Graph &g);
bool is_unit_interval(const Graph &g);
bool is_bipartite(const Graph &g);
bool is_triangle_free(const Graph &g);

// Visit order of maximum cardinality search. Its reverse is a perfect
// elimination ordering exactly when g is chordal.
std::vector<Vertex> maximum_cardinality_search(const Graph &g);
bool is_perfect_elimination_ordering(const Graph &g, std::span<const Vertex> order);
bool has_asteroidal_triple(const Graph &g);

// Hereditary class with a membership oracle and, when known, a forbidden
// family describing it.
struct ClassSpec {
  std::string name;
  GraphPredicate oracle;
  std::optional<ForbiddenFamily> forbidden;
};

// threshold, chordal, cograph, interval, unit_interval, bipartite,
// triangle_free. Throws UnknownName otherwise.
ClassSpec class_spec(std::string_view name);
bool is_member(std::string_view class_name, const Graph &g);
std::vector<std::string> class_names();

}  // namespace graphlim
