#pragma once

#include "graphlim/graph.hpp"
#include "graphlim/graphon.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>

namespace graphlim {

using GraphPredicate = std::function<bool(const Graph &)>;

// One draw of G(n,W) together with its latent block labels.
struct SampledGraph {
  Graph graph;
  std::vector<std::size_t> blocks;
  std::uint64_t seed = 0;
  std::string graphon_id;
};

struct TrialReport {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::uint64_t master_seed = 0;

  double estimate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
  // "n<TAB>trials<TAB>successes<TAB>p_hat<TAB>master_seed", p_hat to 6 places.
  std::string to_string() const;
};

// splitmix64 finaliser.
std::uint64_t mix64(std::uint64_t x);
// Seed of trial `index` under `master`: mix64(master + (index+1) * golden).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Latent blocks by inverse transform over the cumulative weights, then one
// uniform per pair i<j in lexicographic order; the edge is kept iff the
// uniform is below W(X_i, X_j). Uniforms are 53-bit fractions from
// std::mt19937_64 seeded with `seed`.
SampledGraph sample(const StepGraphon &w, std::size_t n, std::uint64_t seed);

// Counts trials whose sample satisfies `oracle`. Trial i uses
// derive_seed(master_seed, i); the result does not depend on `threads`
// (0 = hardware concurrency). The oracle must be safe to call concurrently.
TrialReport monte_carlo(const StepGraphon &w, std::size_t n, std::size_t trials,
                        const GraphPredicate &oracle, std::uint64_t master_seed,
                        unsigned threads = 0);

// Relative frequency of every labelled outcome on n <= 4 vertices, including
// outcomes that never occurred.
std::map<Graph, double> empirical_distribution(const StepGraphon &w, std::size_t n,
                                               std::size_t trials,
                                               std::uint64_t master_seed);

}  // namespace graphlim
