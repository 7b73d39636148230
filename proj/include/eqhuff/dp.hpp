#pragma once

#include <cstddef>
#include <vector>

#include "eqhuff/bounds.hpp"
#include "eqhuff/codebook.hpp"
#include "eqhuff/huffman.hpp"
#include "eqhuff/model.hpp"
#include "eqhuff/stubs.hpp"

namespace eqhuff {

// Cost of hanging the descending-order range [first, last) as a Huffman
// subtree below stub `stub`: huffman(first, last) + level * mass(first, last).
double h_cost(std::size_t first, std::size_t last, std::size_t stub, const CostTables& tables,
              const StubSet& stubs);

// Optimal-cost and split tables over the j largest probabilities and the k
// shallowest stubs, 1 <= j <= items, 1 <= k <= stubs.
class DpTables {
 public:
  DpTables(std::size_t items, std::size_t stubs);

  std::size_t items() const { return items_; }
  std::size_t stubs() const { return stubs_; }

  double best(std::size_t j, std::size_t k) const { return best_[at(j, k)]; }
  std::size_t split(std::size_t j, std::size_t k) const { return split_[at(j, k)]; }
  void set(std::size_t j, std::size_t k, double cost, std::size_t split);

 private:
  std::size_t at(std::size_t j, std::size_t k) const;

  std::size_t items_;
  std::size_t stubs_;
  std::vector<double> best_;
  std::vector<std::size_t> split_;
};

// Runs the recurrence over the first `stub_count` stubs. Ties go to the
// least split index.
DpTables fill_tables(const CostTables& tables, const StubSet& stubs, std::size_t stub_count);

// Range [first, last) of the descending unconstrained list assigned to a stub.
struct Segment {
  std::size_t stub = 0;
  int stub_level = 0;
  std::size_t first = 0;
  std::size_t last = 0;

  bool empty() const { return first == last; }
  bool operator==(const Segment&) const = default;
};

// Walks the split table back from (items, stubs); one segment per stub.
std::vector<Segment> reconstruct_partition(const DpTables& dp, const StubSet& stubs);

// Builds code words: each stub's group (descending-order positions into
// views.unconstrained) gets a canonical Huffman subtree under the stub
// prefix, ordered by (depth, probability desc, index). `groups` has at most
// one entry per stub. A lone empty code word becomes "0".
Codebook assemble_codebook(const SourceSpec& spec, const SortedViews& views,
                           const StubSet& stubs,
                           const std::vector<std::vector<std::size_t>>& groups,
                           const std::vector<AssignedCode>& constrained);

std::vector<std::vector<std::size_t>> segment_groups(const std::vector<Segment>& partition);

struct Solution {
  Codebook codebook;
  // Sum of p_i |code_i| over the emitted codebook.
  double expected_length = 0.0;
  // F[M, m'] plus the constrained mass; equals expected_length except for
  // the single-symbol code "0".
  double dp_cost = 0.0;
  std::vector<Segment> partition;
  StubSet stubs;
  BoundsReport bounds;

  double gap() const { return expected_length - bounds.constrained_entropy; }
};

// Optimal prefix code under the equality length constraints.
// Throws InfeasibleError when no such code exists.
Solution solve(const SourceSpec& spec);

}  // namespace eqhuff
