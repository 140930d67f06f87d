#include "graphlim/sampler.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <thread>

namespace graphlim {

std::string TrialReport::to_string() const {
  char p_hat[32];
  std::snprintf(p_hat, sizeof p_hat, "%.6f", estimate());
  return std::to_string(n) + "\t" + std::to_string(trials) + "\t" +
         std::to_string(successes) + "\t" + p_hat + "\t" +
         std::to_string(master_seed);
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

namespace {

double uniform53(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SampledGraph sample(const StepGraphon &w, std::size_t n, std::uint64_t seed) {
  const auto k = w.blocks();
  std::vector<double> cumulative(k);
  Rational running = 0;
  for (std::size_t b = 0; b < k; ++b) {
    running += w.weight(b);
    cumulative[b] = to_double(running);
  }
  std::vector<double> values(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) values[a * k + b] = to_double(w.value(a, b));

  std::mt19937_64 rng(seed);
  SampledGraph out{Graph(n), std::vector<std::size_t>(n), seed, w.name()};
  for (std::size_t i = 0; i < n; ++i) {
    const double u = uniform53(rng);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    auto b = static_cast<std::size_t>(it - cumulative.begin());
    // Rounding of the last cumulative weight, or trailing zero-mass blocks.
    if (b >= k) b = k - 1;
    while (w.weight(b) == 0 && b > 0) --b;
    out.blocks[i] = b;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (uniform53(rng) < values[out.blocks[i] * k + out.blocks[j]])
        out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

TrialReport monte_carlo(const StepGraphon &w, std::size_t n, std::size_t trials,
                        const GraphPredicate &oracle, std::uint64_t master_seed,
                        unsigned threads) {
  if (trials == 0) throw std::invalid_argument("monte_carlo: trials must be >= 1");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));

  // Trials are dealt round-robin; each worker owns one slot of `counts`.
  std::vector<std::size_t> counts(threads, 0);
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < trials; i += threads)
      if (oracle(sample(w, n, derive_seed(master_seed, i)).graph)) ++counts[worker];
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  TrialReport report{n, trials, 0, master_seed};
  for (auto c : counts) report.successes += c;
  return report;
}

std::map<Graph, double> empirical_distribution(const StepGraphon &w, std::size_t n,
                                               std::size_t trials,
                                               std::uint64_t master_seed) {
  if (n > 4) throw std::invalid_argument("empirical_distribution: n must be <= 4");
  if (trials == 0) throw std::invalid_argument("empirical_distribution: trials must be >= 1");
  std::map<Graph, std::size_t> counts;
  for (const auto &g : enumerate_labelled(n)) counts[g] = 0;
  for (std::size_t i = 0; i < trials; ++i)
    ++counts[sample(w, n, derive_seed(master_seed, i)).graph];
  std::map<Graph, double> freq;
  for (const auto &[g, c] : counts)
    freq.emplace(g, static_cast<double>(c) / static_cast<double>(trials));
  return freq;
}

}  // namespace graphlim
