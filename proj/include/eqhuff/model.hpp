#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqhuff {

using BigInt = boost::multiprecision::cpp_int;

// Longest code-word length a constraint may request. Keeps 2^-l a normal
// double so the real-valued bounds stay finite.
inline constexpr int kMaxConstraintLength = 1022;

// Smallest normalized probability accepted at parse time.
inline constexpr double kMinProbability = 1e-300;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by operations that require a feasible constraint set.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceSymbol {
  std::string id;
  double weight = 0.0;
  // Required code-word length; empty means unrestricted.
  std::optional<int> length;
};

// A validated problem instance. Immutable after construction.
class SourceSpec {
 public:
  // Validates and normalizes; throws ParseError naming the offending field.
  static SourceSpec from_symbols(std::vector<SourceSymbol> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::vector<SourceSymbol>& symbols() const { return symbols_; }
  const SourceSymbol& symbol(std::size_t i) const { return symbols_.at(i); }

  // Normalized probability p_i = weight_i / sum of weights.
  double probability(std::size_t i) const { return probabilities_.at(i); }
  const std::vector<double>& probabilities() const { return probabilities_; }

  bool is_constrained(std::size_t i) const { return symbols_.at(i).length.has_value(); }
  std::size_t constrained_count() const { return constrained_count_; }
  std::size_t unconstrained_count() const { return symbols_.size() - constrained_count_; }

  std::optional<std::size_t> find(std::string_view id) const;

 private:
  SourceSpec() = default;

  std::vector<SourceSymbol> symbols_;
  std::vector<double> probabilities_;
  std::size_t constrained_count_ = 0;
};

// Parses {"symbols":[{"id":..,"weight":..,"length":..}]}.
SourceSpec parse_spec(std::string_view document);

// Exact dyadic rational numerator / 2^exponent.
struct DyadicRational {
  BigInt numerator = 0;
  int exponent = 0;

  bool is_zero() const { return numerator == 0; }
  // Compares against 1 without rounding: -1, 0 or +1.
  int compare_to_one() const;
  double to_double() const;
  std::string to_string() const;
};

// Sum of 2^-l over the given lengths, over denominator 2^max(l).
DyadicRational kraft_sum(const std::vector<int>& lengths);

struct FeasibilityReport {
  DyadicRational kraft_sum;
  bool feasible = false;
  std::string reason;
};

FeasibilityReport check_feasibility(const SourceSpec& spec);

// Throws InfeasibleError carrying the report's reason.
void require_feasible(const SourceSpec& spec);

struct ConstrainedEntry {
  std::size_t index = 0;
  int length = 0;
};

struct UnconstrainedEntry {
  std::size_t index = 0;
  double probability = 0.0;
};

// Constrained symbols by (length asc, index asc); unconstrained symbols by
// (probability desc, index asc).
struct SortedViews {
  std::vector<ConstrainedEntry> constrained;
  std::vector<UnconstrainedEntry> unconstrained;

  std::vector<double> descending_probabilities() const;
};

SortedViews sorted_views(const SourceSpec& spec);

}  // namespace eqhuff
