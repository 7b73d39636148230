#include "eqhuff/codebook.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace eqhuff {

std::optional<std::string_view> Codebook::code_for(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return e.code;
  }
  return std::nullopt;
}

DyadicRational Codebook::kraft() const {
  std::vector<int> lengths;
  lengths.reserve(entries_.size());
  for (const auto& e : entries_) lengths.push_back(static_cast<int>(e.code.size()));
  return kraft_sum(lengths);
}

bool Codebook::is_prefix_free() const {
  // After sorting, a prefix sorts immediately before some word it prefixes.
  std::vector<std::string_view> codes;
  codes.reserve(entries_.size());
  for (const auto& e : entries_) codes.emplace_back(e.code);
  std::sort(codes.begin(), codes.end());
  for (std::size_t i = 1; i < codes.size(); ++i) {
    if (codes[i].substr(0, codes[i - 1].size()) == codes[i - 1]) return false;
  }
  return true;
}

double expected_length(const SourceSpec& spec, const Codebook& codebook) {
  double total = 0.0;
  for (const auto& e : codebook.entries()) {
    const auto idx = spec.find(e.id);
    if (!idx) throw std::invalid_argument("codebook id '" + e.id + "' not in spec");
    total += spec.probability(*idx) * static_cast<double>(e.code.size());
  }
  return total;
}

std::vector<std::string> validate_codebook(const SourceSpec& spec, const Codebook& codebook) {
  std::vector<std::string> problems;
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& e : codebook.entries()) {
    if (!seen.emplace(e.id, 0).second) {
      problems.push_back("duplicate entry for '" + e.id + "'");
      continue;
    }
    const auto idx = spec.find(e.id);
    if (!idx) {
      problems.push_back("unknown symbol '" + e.id + "'");
      continue;
    }
    if (e.code.empty()) {
      problems.push_back("'" + e.id + "' has an empty code word");
    }
    if (e.code.find_first_not_of("01") != std::string::npos) {
      problems.push_back("'" + e.id + "' code word is not binary");
    }
    if (const auto& len = spec.symbol(*idx).length;
        len && static_cast<int>(e.code.size()) != *len) {
      problems.push_back("'" + e.id + "' has length " + std::to_string(e.code.size()) +
                         ", constraint requires " + std::to_string(*len));
    }
  }
  for (const auto& s : spec.symbols()) {
    if (!seen.count(s.id)) problems.push_back("missing code word for '" + s.id + "'");
  }
  if (!codebook.is_prefix_free()) {
    problems.push_back("code is not prefix-free");
  }
  const auto kraft = codebook.kraft();
  if (kraft.compare_to_one() > 0) {
    problems.push_back("Kraft sum " + kraft.to_string() + " exceeds 1");
  }
  return problems;
}

}  // namespace eqhuff
