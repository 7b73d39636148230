#include "eqhuff/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "eqhuff/huffman.hpp"

namespace eqhuff {

namespace {

// Unconstrained symbol indices, probability descending then index ascending.
std::vector<std::size_t> descending_free(const SourceSpec& spec) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (!spec.is_constrained(i)) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return spec.probability(a) > spec.probability(b);
  });
  return idx;
}

double constrained_part(const SourceSpec& spec) {
  double total = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (const auto& len = spec.symbol(i).length) total += spec.probability(i) * *len;
  }
  return total;
}

// Sum of p_r (level + depth_r) for one subtree; weights must be descending.
double subtree_cost(const std::vector<double>& weights, int level) {
  const auto code = huffman_lengths(weights);
  double total = 0.0;
  for (std::size_t r = 0; r < weights.size(); ++r) {
    total += weights[r] * (level + code.relative_lengths[r]);
  }
  return total;
}

std::uint64_t within_budget(const BigInt& count, std::uint64_t budget) {
  if (count > budget) {
    throw BudgetExceeded("oracle: " + count.str() + " candidates exceed budget " +
                         std::to_string(budget));
  }
  return static_cast<std::uint64_t>(count);
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t budget) {
  BigInt v = 1;
  for (std::size_t e = 0; e < exp && v <= budget; ++e) v *= base;
  return within_budget(v, budget);
}

std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t budget) {
  BigInt v = 1;
  for (std::uint64_t i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return within_budget(v, budget);
}

}  // namespace

std::vector<int> oracle_stub_levels(const SourceSpec& spec) {
  require_feasible(spec);
  if (spec.unconstrained_count() == 0) return {};
  if (spec.constrained_count() == 0) return {0};

  std::map<int, int> count;
  for (const auto& s : spec.symbols()) {
    if (s.length) ++count[*s.length];
  }
  const int deepest = count.rbegin()->first;
  for (int l = deepest; l >= 1; --l) {
    while (count[l] >= 2) {
      count[l] -= 2;
      ++count[l - 1];
    }
  }
  int d_max = 0;
  for (int l = deepest; l >= 1; --l) {
    if (count[l] == 1) {
      d_max = l;
      break;
    }
  }
  std::vector<int> levels;
  for (int h = 1; h < d_max; ++h) {
    if (count[h] == 0) levels.push_back(h);
  }
  levels.push_back(d_max);
  return levels;
}

double evaluate_assignment(const SourceSpec& spec, const std::vector<int>& stub_levels,
                           const std::vector<int>& assignment) {
  const auto order = descending_free(spec);
  std::vector<std::vector<double>> groups(stub_levels.size());
  for (auto i : order) {
    const int k = assignment.at(i);
    groups.at(static_cast<std::size_t>(k)).push_back(spec.probability(i));
  }
  double total = constrained_part(spec);
  for (std::size_t k = 0; k < groups.size(); ++k) {
    total += subtree_cost(groups[k], stub_levels[k]);
  }
  return total;
}

OracleResult exhaustive_division_solve(const SourceSpec& spec, std::uint64_t budget) {
  OracleResult result;
  result.stub_levels = oracle_stub_levels(spec);
  result.best_assignment.assign(spec.size(), -1);
  const double fixed = constrained_part(spec);
  const auto order = descending_free(spec);
  const std::size_t items = order.size();
  const std::size_t m = result.stub_levels.size();
  if (items == 0) {
    result.best_cost = fixed;
    result.evaluations = 1;
    return result;
  }
  const std::uint64_t total = checked_power(m, items, budget);

  std::vector<int> digit(items, 0);
  std::vector<std::vector<double>> groups(m);
  double best = 0.0;
  std::vector<int> best_digit;
  for (std::uint64_t n = 0; n < total; ++n) {
    for (auto& g : groups) g.clear();
    for (std::size_t r = 0; r < items; ++r) {
      groups[static_cast<std::size_t>(digit[r])].push_back(spec.probability(order[r]));
    }
    double cost = 0.0;
    for (std::size_t k = 0; k < m; ++k) cost += subtree_cost(groups[k], result.stub_levels[k]);
    if (best_digit.empty() || cost < best) {
      best = cost;
      best_digit = digit;
    }
    ++result.evaluations;
    for (std::size_t r = 0; r < items; ++r) {
      if (++digit[r] < static_cast<int>(m)) break;
      digit[r] = 0;
    }
  }
  for (std::size_t r = 0; r < items; ++r) result.best_assignment[order[r]] = best_digit[r];
  result.unconstrained_cost = best;
  result.best_cost = fixed + best;
  return result;
}

OracleResult contiguous_partition_solve(const SourceSpec& spec, std::uint64_t budget) {
  OracleResult result;
  result.stub_levels = oracle_stub_levels(spec);
  result.best_assignment.assign(spec.size(), -1);
  const double fixed = constrained_part(spec);
  const auto order = descending_free(spec);
  const std::size_t items = order.size();
  const std::size_t m = result.stub_levels.size();
  if (items == 0) {
    result.best_cost = fixed;
    result.evaluations = 1;
    return result;
  }
  checked_binomial(items + m - 1, m - 1, budget);

  std::vector<double> weights;
  for (auto i : order) weights.push_back(spec.probability(i));

  // cuts[k] is where segment k starts; cuts[m] == items.
  std::vector<std::size_t> cuts(m + 1, 0);
  cuts[m] = items;
  double best = 0.0;
  std::vector<std::size_t> best_cuts;

  auto evaluate = [&]() {
    double cost = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<double> seg(weights.begin() + static_cast<std::ptrdiff_t>(cuts[k]),
                              weights.begin() + static_cast<std::ptrdiff_t>(cuts[k + 1]));
      cost += subtree_cost(seg, result.stub_levels[k]);
    }
    if (best_cuts.empty() || cost < best) {
      best = cost;
      best_cuts = cuts;
    }
    ++result.evaluations;
  };

  // Non-decreasing cut positions cuts[1..m-1] in [0, items].
  auto recurse = [&](auto& self, std::size_t k) -> void {
    if (k == m) {
      evaluate();
      return;
    }
    for (std::size_t c = cuts[k - 1]; c <= items; ++c) {
      cuts[k] = c;
      self(self, k + 1);
    }
  };
  recurse(recurse, 1);

  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t r = best_cuts[k]; r < best_cuts[k + 1]; ++r) {
      result.best_assignment[order[r]] = static_cast<int>(k);
    }
  }
  result.unconstrained_cost = best;
  result.best_cost = fixed + best;
  return result;
}

}  // namespace eqhuff
