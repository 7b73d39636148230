#pragma once

#include <vector>

#include "eqhuff/model.hpp"

namespace eqhuff {

// Real-valued lower bound on the constrained expected length, in bits.
// Per-symbol vectors follow input order.
struct BoundsReport {
  double entropy = 0.0;
  // Probability mass of the unconstrained symbols.
  double big_p = 0.0;
  // Code space left over by the constraints: 1 - sum 2^-l_i.
  double big_q = 0.0;
  // Sum of p_i * ideal_length_i.
  double constrained_entropy = 0.0;
  // sum over constrained i of p_i log2(p_i 2^l_i).
  double redundancy_constraint_term = 0.0;
  // P log2(P / Q).
  double redundancy_partition_term = 0.0;
  std::vector<double> ideal_lengths;
  std::vector<int> witness_lengths;
  double witness_cost = 0.0;

  // entropy + both redundancy terms.
  double decomposed_entropy() const {
    return entropy + redundancy_constraint_term + redundancy_partition_term;
  }
  double redundancy() const { return constrained_entropy - entropy; }
};

double entropy(const SourceSpec& spec);

// l_i on constrained symbols; log2(P / (Q p_i)) elsewhere.
std::vector<double> ideal_lengths(const SourceSpec& spec);

// l_i on constrained symbols; ceil(log2(P / (Q p_i))) elsewhere.
std::vector<int> witness_code_lengths(const SourceSpec& spec);

// Fills every field. Throws InfeasibleError on an infeasible spec, and
// std::logic_error if the direct and decomposed values disagree by > 1e-9.
BoundsReport constrained_entropy(const SourceSpec& spec);

}  // namespace eqhuff
