#include "eqhuff/dp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eqhuff {

double h_cost(std::size_t first, std::size_t last, std::size_t stub, const CostTables& tables,
              const StubSet& stubs) {
  if (stub >= stubs.size()) {
    throw std::out_of_range("h_cost: stub index out of range");
  }
  if (first > last || last > tables.size()) {
    throw std::out_of_range("h_cost: bad range");
  }
  if (first == last) return 0.0;
  return tables.huffman(first, last) + stubs[stub].level * tables.mass(first, last);
}

DpTables::DpTables(std::size_t items, std::size_t stubs)
    : items_(items),
      stubs_(stubs),
      best_(items * stubs, 0.0),
      split_(items * stubs, 0) {}

std::size_t DpTables::at(std::size_t j, std::size_t k) const {
  if (j < 1 || j > items_ || k < 1 || k > stubs_) {
    throw std::out_of_range("DpTables: index out of range");
  }
  return (k - 1) * items_ + (j - 1);
}

void DpTables::set(std::size_t j, std::size_t k, double cost, std::size_t split) {
  const auto idx = at(j, k);
  best_[idx] = cost;
  split_[idx] = split;
}

DpTables fill_tables(const CostTables& tables, const StubSet& stubs, std::size_t stub_count) {
  const std::size_t items = tables.size();
  if (items == 0 || stub_count == 0 || stub_count > stubs.size()) {
    throw std::invalid_argument("fill_tables: need at least one item and one stub");
  }
  DpTables dp(items, stub_count);
  for (std::size_t j = 1; j <= items; ++j) {
    dp.set(j, 1, h_cost(0, j, 0, tables, stubs), 0);
  }
  for (std::size_t k = 2; k <= stub_count; ++k) {
    for (std::size_t j = 1; j <= items; ++j) {
      double best = dp.best(1, k - 1) + h_cost(1, j, k - 1, tables, stubs);
      std::size_t arg = 1;
      for (std::size_t i = 2; i <= j; ++i) {
        const double c = dp.best(i, k - 1) + h_cost(i, j, k - 1, tables, stubs);
        if (c < best) {
          best = c;
          arg = i;
        }
      }
      dp.set(j, k, best, arg);
    }
  }
  return dp;
}

std::vector<Segment> reconstruct_partition(const DpTables& dp, const StubSet& stubs) {
  const std::size_t m = dp.stubs();
  // bounds[k] is the paper-style s_k; segment k covers [bounds[k], bounds[k+1]).
  std::vector<std::size_t> bounds(m + 2, 0);
  bounds[m + 1] = dp.items();
  for (std::size_t k = m; k >= 2; --k) {
    bounds[k] = dp.split(bounds[k + 1], k);
    if (bounds[k] < 1 || bounds[k] > bounds[k + 1]) {
      throw std::logic_error("reconstruct_partition: inconsistent split table");
    }
  }
  bounds[1] = 0;
  std::vector<Segment> out;
  out.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) {
    out.push_back({k - 1, stubs[k - 1].level, bounds[k], bounds[k + 1]});
  }
  return out;
}

std::vector<std::vector<std::size_t>> segment_groups(const std::vector<Segment>& partition) {
  std::vector<std::vector<std::size_t>> groups;
  for (const auto& seg : partition) {
    if (groups.size() <= seg.stub) groups.resize(seg.stub + 1);
    for (std::size_t r = seg.first; r < seg.last; ++r) groups[seg.stub].push_back(r);
  }
  return groups;
}

Codebook assemble_codebook(const SourceSpec& spec, const SortedViews& views,
                           const StubSet& stubs,
                           const std::vector<std::vector<std::size_t>>& groups,
                           const std::vector<AssignedCode>& constrained) {
  if (groups.size() > stubs.size()) {
    throw std::invalid_argument("assemble_codebook: more groups than stubs");
  }
  std::vector<std::string> codes(spec.size());
  for (const auto& c : constrained) codes.at(c.index) = c.code;

  for (std::size_t k = 0; k < groups.size(); ++k) {
    auto group = groups[k];
    if (group.empty()) continue;
    std::sort(group.begin(), group.end());
    std::vector<double> weights;
    weights.reserve(group.size());
    for (auto pos : group) weights.push_back(views.unconstrained.at(pos).probability);
    const auto sub = huffman_lengths(weights);

    std::vector<std::size_t> order(group.size());
    for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return sub.relative_lengths[a] < sub.relative_lengths[b];
    });

    std::string next;
    for (std::size_t r : order) {
      const auto depth = static_cast<std::size_t>(sub.relative_lengths[r]);
      if (next.size() < depth) next.append(depth - next.size(), '0');
      codes.at(views.unconstrained.at(group[r]).index) = stubs[k].prefix + next;
      next = increment_bits(next);
    }
  }

  std::vector<CodeEntry> entries;
  entries.reserve(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    entries.push_back({spec.symbol(i).id, codes[i]});
  }
  if (entries.size() == 1 && entries.front().code.empty()) {
    entries.front().code = "0";
  }
  return Codebook(std::move(entries));
}

Solution solve(const SourceSpec& spec) {
  require_feasible(spec);
  Solution sol;
  const auto views = sorted_views(spec);
  const auto constrained = constrained_codewords(spec);
  sol.bounds = constrained_entropy(spec);

  double constrained_mass = 0.0;
  for (const auto& c : views.constrained) {
    constrained_mass += spec.probability(c.index) * c.length;
  }

  double free_cost = 0.0;
  const std::size_t items = views.unconstrained.size();
  if (items > 0) {
    sol.stubs = free_stub_levels(spec);
    const std::size_t used = std::min(sol.stubs.size(), items);
    const auto weights = views.descending_probabilities();
    const CostTables tables(weights);
    const DpTables dp = fill_tables(tables, sol.stubs, used);
    sol.partition = reconstruct_partition(dp, sol.stubs);
    free_cost = dp.best(items, used);

    double check = 0.0;
    for (const auto& seg : sol.partition) {
      check += h_cost(seg.first, seg.last, seg.stub, tables, sol.stubs);
    }
    if (std::abs(check - free_cost) > 1e-9) {
      throw std::logic_error("solve: reconstructed partition does not reproduce F[M, m]");
    }
  }

  sol.codebook =
      assemble_codebook(spec, views, sol.stubs, segment_groups(sol.partition), constrained);
  sol.dp_cost = free_cost + constrained_mass;
  sol.expected_length = expected_length(spec, sol.codebook);
  return sol;
}

}  // namespace eqhuff
