#pragma once

#include "graphlim/graph.hpp"
#include "graphlim/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace graphlim {

// Graphon on a finite probability space: block i has mass weight(i) and the
// kernel takes value value(i,j) on block pair (i,j).
class StepGraphon {
public:
  // Throws std::invalid_argument unless weights are non-negative and sum to
  // 1 and the value matrix is square, symmetric and within [0,1].
  StepGraphon(std::vector<Rational> weights,
              std::vector<std::vector<Rational>> values,
              std::string name = "custom");

  std::size_t blocks() const { return weights_.size(); }
  const Rational &weight(std::size_t i) const { return weights_[i]; }
  const Rational &value(std::size_t i, std::size_t j) const {
    return values_[i * blocks() + j];
  }
  const std::string &name() const { return name_; }

  // Integer view used by the density kernels: weight(i) = weight_num(i) /
  // weight_den(), value(i,j) = value_num(i,j) / value_den().
  const BigInt &weight_num(std::size_t i) const { return weight_num_[i]; }
  const BigInt &weight_den() const { return weight_den_; }
  const BigInt &value_num(std::size_t i, std::size_t j) const {
    return value_num_[i * blocks() + j];
  }
  const BigInt &value_den() const { return value_den_; }

  friend bool operator==(const StepGraphon &a, const StepGraphon &b) {
    return a.weights_ == b.weights_ && a.values_ == b.values_;
  }

private:
  std::vector<Rational> weights_;
  std::vector<Rational> values_;
  std::string name_;
  std::vector<BigInt> weight_num_;
  BigInt weight_den_;
  std::vector<BigInt> value_num_;
  BigInt value_den_;
};

// t(F,W): sum over block assignments of prod weights * prod_{edges} W.
Rational hom_density(const Graph &f, const StepGraphon &w);
// t_ind(F,W): as hom_density with an extra (1-W) factor per non-edge.
Rational ind_density(const Graph &f, const StepGraphon &w);
// t(C_k,W) as trace((diag(weights) * W)^k); k >= 3.
Rational cycle_density(std::size_t k, const StepGraphon &w);

// True iff every value on a pair of positive-mass blocks is 0 or 1.
bool is_random_free(const StepGraphon &w);

// W_G: |G| blocks of mass 1/|G|, value 1 exactly on edges.
StepGraphon graphon_of_graph(const Graph &g);

StepGraphon constant_graphon(const Rational &p);
// Two blocks of mass 1/2 with W(x,y) = (x+y)/2 on {0,1}.
StepGraphon chordal_two_point();
// k equal blocks, W(i,j) = 1 iff i + j >= k (0-indexed).
StepGraphon threshold_staircase(std::size_t k);
// Two blocks of mass 1/2, value 1 across and 0 inside.
StepGraphon bipartite_two_point();

// "chordal_two_point", "bipartite_two_point", "constant:<p>" or
// "threshold_staircase:<k>".
StepGraphon named_graphon(std::string_view spec);
std::vector<std::string> catalog_graphon_names();

// Text format: "k", then k weights, then k rows of k values; rationals are
// written "p/q" or as integers and separated by single spaces.
std::string to_text(const StepGraphon &w);
StepGraphon parse_graphon(std::string_view text);

// Splits block b into two halves carrying identical rows.
StepGraphon split_block(const StepGraphon &w, std::size_t b);

}  // namespace graphlim
