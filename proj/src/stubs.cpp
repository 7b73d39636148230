#include "eqhuff/stubs.hpp"

#include <algorithm>
#include <cassert>

namespace eqhuff {

std::string increment_bits(std::string bits) {
  for (std::size_t i = bits.size(); i-- > 0;) {
    if (bits[i] == '0') {
      bits[i] = '1';
      return bits;
    }
    bits[i] = '0';
  }
  return {};
}

MergedLengths merge_constraints(const std::vector<int>& lengths) {
  const DyadicRational sum = kraft_sum(lengths);
  if (sum.compare_to_one() > 0) {
    throw InfeasibleError("impossible: Kraft sum " + sum.to_string() + " exceeds 1");
  }
  MergedLengths merged;
  if (sum.is_zero()) {
    return merged;
  }
  // Bit b of the numerator (from the least significant end) is the dyadic
  // term 2^-(exponent - b).
  for (int b = sum.exponent; b >= 0; --b) {
    if (boost::multiprecision::bit_test(sum.numerator, static_cast<unsigned>(b))) {
      merged.lengths.push_back(sum.exponent - b);
    }
  }
  assert(merged.lengths.front() > 0 || merged.lengths.size() == 1);
  return merged;
}

std::vector<AssignedCode> constrained_codewords(const SourceSpec& spec) {
  require_feasible(spec);
  const auto views = sorted_views(spec);
  std::vector<AssignedCode> out;
  out.reserve(views.constrained.size());
  std::string next;
  for (const auto& entry : views.constrained) {
    if (out.empty()) {
      next.assign(static_cast<std::size_t>(entry.length), '0');
    } else {
      next.append(static_cast<std::size_t>(entry.length) - next.size(), '0');
    }
    out.push_back({entry.index, next});
    next = increment_bits(next);
  }
  return out;
}

StubSet free_stub_levels(const SourceSpec& spec) {
  require_feasible(spec);
  StubSet set;
  if (spec.unconstrained_count() == 0) {
    return set;
  }
  if (spec.constrained_count() == 0) {
    set.stubs.push_back({0, ""});
    return set;
  }

  std::vector<int> lengths;
  for (const auto& s : spec.symbols()) {
    if (s.length) lengths.push_back(*s.length);
  }
  const DyadicRational sum = kraft_sum(lengths);
  // Deepest 1-bit of S; merging can lift it above the longest constraint.
  const int depth =
      sum.exponent - static_cast<int>(boost::multiprecision::lsb(sum.numerator));
  // The complement's 1-bits: zero bits of S above the deepest level, plus it.
  std::vector<bool> is_stub(static_cast<std::size_t>(depth) + 1, false);
  for (int h = 1; h < depth; ++h) {
    is_stub[h] = !boost::multiprecision::bit_test(sum.numerator,
                                                  static_cast<unsigned>(sum.exponent - h));
  }
  is_stub[depth] = true;

  // Walk [S, 1) from S upward; block sizes grow as levels shrink.
  auto codes = constrained_codewords(spec);
  std::string pos = increment_bits(codes.back().code);
  assert(pos.size() >= static_cast<std::size_t>(depth));
  for (int h = depth; h >= 1; --h) {
    if (!is_stub[h]) continue;
    std::string prefix = pos.substr(0, static_cast<std::size_t>(h));
    set.stubs.push_back({h, prefix});
    std::string bumped = increment_bits(prefix);
    pos = bumped.empty() ? std::string() : bumped + pos.substr(static_cast<std::size_t>(h));
  }
  std::reverse(set.stubs.begin(), set.stubs.end());
  return set;
}

}  // namespace eqhuff
