#include "eqhuff/huffman.hpp"

#include <cassert>
#include <stdexcept>

namespace eqhuff {

namespace {

// Runs the two-queue merge. Leaves are consumed from the back of the
// descending list (smallest first); merged nodes are produced in
// non-decreasing order, so both queue fronts are their minima. Ties go to
// the merged queue.
// `parent` receives, for each of the 2n-1 nodes, the index of its parent
// (leaves are 0..n-1 by position, merged nodes n..2n-2).
template <bool kTrackParents>
double two_queue_merge(std::span<const double> w, std::vector<std::size_t>* parent,
                       std::vector<double>& merged) {
  const std::size_t n = w.size();
  merged.clear();
  if (n < 2) return 0.0;
  merged.reserve(n - 1);
  if constexpr (kTrackParents) parent->assign(2 * n - 1, 0);

  std::size_t leaf = n;  // next leaf is w[leaf - 1]
  std::size_t head = 0;  // next unconsumed merged node
  double total = 0.0;

  auto take = [&]() -> std::pair<double, std::size_t> {
    const bool leaf_ok = leaf > 0;
    const bool node_ok = head < merged.size();
    if (leaf_ok && (!node_ok || w[leaf - 1] < merged[head])) {
      --leaf;
      return {w[leaf], leaf};
    }
    assert(node_ok);
    const std::size_t id = n + head;
    return {merged[head++], id};
  };

  for (std::size_t step = 0; step + 1 < n; ++step) {
    const auto [a, ida] = take();
    const auto [b, idb] = take();
    const double sum = a + b;
    if constexpr (kTrackParents) {
      (*parent)[ida] = n + merged.size();
      (*parent)[idb] = n + merged.size();
    }
    merged.push_back(sum);
    total += sum;
  }
  return total;
}

}  // namespace

SegmentCode huffman_lengths(std::span<const double> descending_weights) {
  SegmentCode code;
  const std::size_t n = descending_weights.size();
  if (n == 0) return code;
  code.relative_lengths.assign(n, 0);
  if (n == 1) return code;

  std::vector<std::size_t> parent;
  std::vector<double> merged;
  two_queue_merge<true>(descending_weights, &parent, merged);

  // The root is the last merged node; parents always have larger ids.
  const std::size_t nodes = 2 * n - 1;
  std::vector<int> depth(nodes, 0);
  for (std::size_t id = nodes - 1; id-- > 0;) {
    depth[id] = depth[parent[id]] + 1;
  }
  for (std::size_t r = 0; r < n; ++r) {
    code.relative_lengths[r] = depth[r];
    code.cost += descending_weights[r] * depth[r];
  }
  return code;
}

double huffman_cost(std::span<const double> descending_weights) {
  std::vector<double> merged;
  return two_queue_merge<false>(descending_weights, nullptr, merged);
}

CostTables::CostTables(std::span<const double> w) : size_(w.size()) {
  prefix_.assign(size_ + 1, 0.0);
  for (std::size_t r = 0; r < size_; ++r) {
    if (r > 0 && w[r] > w[r - 1]) {
      throw std::invalid_argument("CostTables: weights must be sorted descending");
    }
    prefix_[r + 1] = prefix_[r] + w[r];
  }
  cost_.assign(size_ * size_, 0.0);
  std::vector<double> merged;
  for (std::size_t first = 0; first < size_; ++first) {
    for (std::size_t last = first + 1; last <= size_; ++last) {
      cost_[first * size_ + (last - 1)] =
          two_queue_merge<false>(w.subspan(first, last - first), nullptr, merged);
    }
  }
}

double CostTables::mass(std::size_t first, std::size_t last) const {
  if (first > last || last > size_) {
    throw std::out_of_range("CostTables::mass: bad range");
  }
  return prefix_[last] - prefix_[first];
}

double CostTables::huffman(std::size_t first, std::size_t last) const {
  if (first > last || last > size_) {
    throw std::out_of_range("CostTables::huffman: bad range");
  }
  if (first == last) return 0.0;
  return cost_[first * size_ + (last - 1)];
}

CostTables segment_cost_tables(std::span<const double> descending_weights) {
  return CostTables(descending_weights);
}

}  // namespace eqhuff
