#include "graphlim/limit_lab.hpp"

#include <stdexcept>

namespace graphlim {

std::string ClosureVerdict::to_string() const {
  switch (status) {
  case ClosureStatus::In:
    return "IN";
  case ClosureStatus::InTruncated:
    return "IN(truncated:" + std::to_string(truncation) + ")";
  case ClosureStatus::Out:
    break;
  }
  const char *label = mode == ContainmentMode::Induced ? " t_ind=" : " t=";
  return "OUT F=" + to_graph6(witness->graph) + label + graphlim::to_string(witness->density);
}

ClosureVerdict closure_membership(const StepGraphon &w, const ForbiddenFamily &family) {
  family.validate();
  ClosureVerdict verdict;
  verdict.mode = family.mode;

  auto check = [&](const Graph &h, Rational density) {
    if (density == 0) return false;
    verdict.status = ClosureStatus::Out;
    verdict.witness = ClosureWitness{h, std::move(density)};
    return true;
  };
  const bool induced = family.mode == ContainmentMode::Induced;
  for (const auto &h : family.members)
    if (check(h, induced ? ind_density(h, w) : hom_density(h, w))) return verdict;
  for (auto k : family.cycle_lengths(family.truncation)) {
    auto density = induced ? ind_density(cycle_graph(k), w) : cycle_density(k, w);
    if (check(cycle_graph(k), std::move(density))) return verdict;
  }
  if (family.is_infinite()) {
    verdict.status = ClosureStatus::InTruncated;
    verdict.truncation = family.truncation;
  }
  return verdict;
}

ClosureVerdict closure_membership_intersection(const StepGraphon &w,
                                               std::span<const ForbiddenFamily> families) {
  ClosureVerdict combined;
  for (const auto &family : families) {
    auto verdict = closure_membership(w, family);
    if (verdict.status == ClosureStatus::Out) return verdict;
    if (verdict.status == ClosureStatus::InTruncated) {
      if (combined.status != ClosureStatus::InTruncated)
        combined = verdict;
      else
        combined.truncation = std::max(combined.truncation, verdict.truncation);
    }
  }
  return combined;
}

std::vector<TrialReport> dichotomy_probe(const StepGraphon &w, const GraphPredicate &oracle,
                                         std::span<const std::size_t> ns, std::size_t trials,
                                         std::uint64_t master_seed) {
  if (ns.empty()) throw std::invalid_argument("dichotomy_probe: empty n list");
  std::vector<TrialReport> reports;
  for (auto n : ns) reports.push_back(monte_carlo(w, n, trials, oracle, master_seed));
  return reports;
}

std::optional<SampledGraph> sample_certificate_out(const StepGraphon &w,
                                                   const GraphPredicate &oracle,
                                                   std::size_t n_max, std::size_t trials,
                                                   std::uint64_t master_seed) {
  for (std::size_t i = 0; i < trials; ++i) {
    auto s = sample(w, n_max, derive_seed(master_seed, i));
    if (!oracle(s.graph)) return s;
  }
  return std::nullopt;
}

}  // namespace graphlim
