#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqhuff/model.hpp"

namespace eqhuff {

struct CodeEntry {
  std::string id;
  std::string code;
};

// Symbol id to code word ('0'/'1' characters), in spec input order.
class Codebook {
 public:
  Codebook() = default;
  explicit Codebook(std::vector<CodeEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<CodeEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const CodeEntry& operator[](std::size_t i) const { return entries_[i]; }

  std::optional<std::string_view> code_for(std::string_view id) const;

  // Exact sum of 2^-|code| over all entries.
  DyadicRational kraft() const;
  bool is_prefix_free() const;

 private:
  std::vector<CodeEntry> entries_;
};

// Sum of p_i |code_i|, matching entries to spec symbols by id.
double expected_length(const SourceSpec& spec, const Codebook& codebook);

// Problems found when validating a codebook against a spec; empty if valid.
// Checks id coverage, binary alphabet, prefix-freeness, Kraft and the
// constrained lengths.
std::vector<std::string> validate_codebook(const SourceSpec& spec, const Codebook& codebook);

}  // namespace eqhuff
