#pragma once

#include "graphlim/classes.hpp"
#include "graphlim/graphon.hpp"
#include "graphlim/sampler.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace graphlim {

enum class ClosureStatus { In, Out, InTruncated };

struct ClosureWitness {
  Graph graph;
  Rational density;  // t_ind in induced mode, t in subgraph mode; always > 0
};

struct ClosureVerdict {
  ClosureStatus status = ClosureStatus::In;
  std::optional<ClosureWitness> witness;  // set iff status == Out
  ContainmentMode mode = ContainmentMode::Induced;
  std::size_t truncation = 0;  // meaningful for InTruncated

  // "IN", "IN(truncated:K)", "OUT F=<graph6> t_ind=<p/q>" (or "t=" in
  // subgraph mode).
  std::string to_string() const;
};

// Decides whether the limit of W lies in the closure of the class described
// by `family`: every member must have zero induced density (zero homomorphism
// density in subgraph mode). Infinite cycle tails are checked up to the
// family's truncation and can only yield Out or InTruncated.
ClosureVerdict closure_membership(const StepGraphon &w, const ForbiddenFamily &family);

// Closure of an intersection of hereditary classes is the intersection of
// the closures. Out wins over InTruncated, which wins over In; the witness
// comes from the first failing family.
ClosureVerdict closure_membership_intersection(const StepGraphon &w,
                                               std::span<const ForbiddenFamily> families);

// One Monte Carlo report of P(G(n,W) in class) per entry of `ns`.
std::vector<TrialReport> dichotomy_probe(const StepGraphon &w, const GraphPredicate &oracle,
                                         std::span<const std::size_t> ns, std::size_t trials,
                                         std::uint64_t master_seed);

// First sample of G(n_max,W) rejected by the oracle, if any. A returned
// sample proves the limit is outside the closure; an empty result proves
// nothing.
std::optional<SampledGraph> sample_certificate_out(const StepGraphon &w,
                                                   const GraphPredicate &oracle,
                                                   std::size_t n_max, std::size_t trials,
                                                   std::uint64_t master_seed);

}  // namespace graphlim
