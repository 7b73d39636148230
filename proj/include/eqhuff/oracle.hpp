#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eqhuff/model.hpp"

namespace eqhuff {

// Brute-force reference solvers. They share only huffman_lengths with the
// production path; stub levels and subtree costs are recomputed here.

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000;

struct OracleResult {
  // Expected length including the constrained symbols.
  double best_cost = 0.0;
  // Contribution of the unconstrained symbols only.
  double unconstrained_cost = 0.0;
  // Per symbol in input order: stub index, or -1 for constrained symbols.
  std::vector<int> best_assignment;
  std::vector<int> stub_levels;
  std::uint64_t evaluations = 0;
};

// Stub levels by literally merging equal constrained lengths pairwise.
std::vector<int> oracle_stub_levels(const SourceSpec& spec);

// Every assignment of the unconstrained symbols to the stubs (m^M of them).
OracleResult exhaustive_division_solve(const SourceSpec& spec,
                                       std::uint64_t budget = kDefaultOracleBudget);

// Every split of the descending probability list into m contiguous,
// possibly empty, segments taken in stub order.
OracleResult contiguous_partition_solve(const SourceSpec& spec,
                                        std::uint64_t budget = kDefaultOracleBudget);

// Re-evaluates an assignment from scratch.
double evaluate_assignment(const SourceSpec& spec, const std::vector<int>& stub_levels,
                           const std::vector<int>& assignment);

}  // namespace eqhuff
