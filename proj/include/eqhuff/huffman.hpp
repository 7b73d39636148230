#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace eqhuff {

// Code-word depths of a Huffman subtree, relative to the subtree root.
struct SegmentCode {
  std::vector<int> relative_lengths;
  double cost = 0.0;
};

// Two-queue Huffman over weights sorted in descending order. On equal
// weights the merged-node queue is drained first, so the result is
// deterministic.
// A single weight sits at depth 0; an empty input yields an empty code.
SegmentCode huffman_lengths(std::span<const double> descending_weights);

// Same construction, returning only the cost (the sum of merged weights).
double huffman_cost(std::span<const double> descending_weights);

// Segment mass and Huffman cost for every contiguous range of a descending
// weight list. Ranges are half-open [first, last) over 0-based positions;
// empty ranges cost 0.
class CostTables {
 public:
  explicit CostTables(std::span<const double> descending_weights);

  std::size_t size() const { return size_; }
  double mass(std::size_t first, std::size_t last) const;
  double huffman(std::size_t first, std::size_t last) const;

 private:
  std::size_t size_ = 0;
  std::vector<double> prefix_;
  // Row-major size_ x size_; entry (first, last - 1) for non-empty ranges.
  std::vector<double> cost_;
};

CostTables segment_cost_tables(std::span<const double> descending_weights);

}  // namespace eqhuff
