#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "eqhuff/model.hpp"

namespace eqhuff {

// An unused node of the code tree: every code word below `prefix` is free.
struct Stub {
  int level = 0;
  std::string prefix;
};

// Free stubs ordered by strictly increasing level.
struct StubSet {
  std::vector<Stub> stubs;

  std::size_t size() const { return stubs.size(); }
  bool empty() const { return stubs.empty(); }
  const Stub& operator[](std::size_t k) const { return stubs[k]; }
};

// Strictly increasing lengths whose dyadic sum equals the input's Kraft sum.
// A Kraft sum of exactly 1 merges to the single length 0.
struct MergedLengths {
  std::vector<int> lengths;
};

MergedLengths merge_constraints(const std::vector<int>& lengths);

// One stub per level: the 1-bits of 1 - S where S is the constraints' Kraft
// sum. Prefixes are the aligned blocks of [S, 1) under the canonical
// constrained placement. Unconstrained problems get the root stub (0, "").
// Returns an empty set when every symbol is constrained.
StubSet free_stub_levels(const SourceSpec& spec);

struct AssignedCode {
  std::size_t index = 0;
  std::string code;
};

// Canonical code words for the constrained symbols, in (length, index) order.
std::vector<AssignedCode> constrained_codewords(const SourceSpec& spec);

// Lexicographic successor of a fixed-width binary string; "" when it wraps.
std::string increment_bits(std::string bits);

}  // namespace eqhuff
