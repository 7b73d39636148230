#include "eqhuff/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include <json.hpp>

namespace eqhuff {

SourceSpec SourceSpec::from_symbols(std::vector<SourceSymbol> symbols) {
  if (symbols.empty()) {
    throw ParseError("symbols: at least one symbol is required");
  }
  std::unordered_set<std::string> seen;
  double total = 0.0;
  std::size_t constrained = 0;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const auto& s = symbols[i];
    const std::string where = "symbols[" + std::to_string(i) + "]";
    if (s.id.empty()) {
      throw ParseError(where + ".id: empty id");
    }
    if (!seen.insert(s.id).second) {
      throw ParseError(where + ".id: duplicate id '" + s.id + "'");
    }
    if (!std::isfinite(s.weight) || s.weight <= 0.0) {
      throw ParseError(where + ".weight: non-positive weight");
    }
    if (s.length) {
      if (*s.length < 1) {
        throw ParseError(where + ".length: constraint must be >= 1");
      }
      if (*s.length > kMaxConstraintLength) {
        throw ParseError(where + ".length: constraint exceeds " +
                         std::to_string(kMaxConstraintLength));
      }
      ++constrained;
    }
    total += s.weight;
  }
  if (!std::isfinite(total)) {
    throw ParseError("symbols: weight sum overflows");
  }

  SourceSpec spec;
  spec.probabilities_.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const double p = symbols[i].weight / total;
    if (!(p >= kMinProbability)) {
      throw ParseError("symbols[" + std::to_string(i) +
                       "].weight: normalized probability below 1e-300");
    }
    spec.probabilities_.push_back(p);
  }
  spec.symbols_ = std::move(symbols);
  spec.constrained_count_ = constrained;
  return spec;
}

std::optional<std::size_t> SourceSpec::find(std::string_view id) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].id == id) {
      return i;
    }
  }
  return std::nullopt;
}

SourceSpec parse_spec(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("symbols")) {
    throw ParseError("symbols: missing top-level 'symbols' array");
  }
  const auto& arr = doc.at("symbols");
  if (!arr.is_array()) {
    throw ParseError("symbols: expected an array");
  }

  std::vector<SourceSymbol> symbols;
  symbols.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& item = arr[i];
    const std::string where = "symbols[" + std::to_string(i) + "]";
    if (!item.is_object()) {
      throw ParseError(where + ": expected an object");
    }
    SourceSymbol s;
    if (!item.contains("id") || !item.at("id").is_string()) {
      throw ParseError(where + ".id: missing or not a string");
    }
    s.id = item.at("id").get<std::string>();
    if (!item.contains("weight") || !item.at("weight").is_number()) {
      throw ParseError(where + ".weight: missing or not a number");
    }
    s.weight = item.at("weight").get<double>();
    if (item.contains("length") && !item.at("length").is_null()) {
      const auto& len = item.at("length");
      if (!len.is_number_integer()) {
        throw ParseError(where + ".length: expected an integer");
      }
      const auto value = len.get<long long>();
      if (value < 1) {
        throw ParseError(where + ".length: constraint must be >= 1");
      }
      if (value > kMaxConstraintLength) {
        throw ParseError(where + ".length: constraint exceeds " +
                         std::to_string(kMaxConstraintLength));
      }
      s.length = static_cast<int>(value);
    }
    symbols.push_back(std::move(s));
  }
  return SourceSpec::from_symbols(std::move(symbols));
}

int DyadicRational::compare_to_one() const {
  const BigInt one = BigInt(1) << exponent;
  if (numerator < one) return -1;
  if (numerator > one) return 1;
  return 0;
}

double DyadicRational::to_double() const {
  if (numerator == 0) return 0.0;
  // Scale down to 64 significant bits before converting.
  const auto bits = static_cast<int>(boost::multiprecision::msb(numerator)) + 1;
  const int shift = std::max(0, bits - 64);
  const auto top = static_cast<unsigned long long>(numerator >> shift);
  return std::ldexp(static_cast<double>(top), shift - exponent);
}

std::string DyadicRational::to_string() const {
  return numerator.str() + "/2^" + std::to_string(exponent);
}

DyadicRational kraft_sum(const std::vector<int>& lengths) {
  DyadicRational sum;
  if (lengths.empty()) {
    return sum;
  }
  sum.exponent = *std::max_element(lengths.begin(), lengths.end());
  for (int l : lengths) {
    sum.numerator += BigInt(1) << (sum.exponent - l);
  }
  return sum;
}

FeasibilityReport check_feasibility(const SourceSpec& spec) {
  std::vector<int> lengths;
  for (const auto& s : spec.symbols()) {
    if (s.length) lengths.push_back(*s.length);
  }
  FeasibilityReport report;
  report.kraft_sum = kraft_sum(lengths);
  const int cmp = report.kraft_sum.compare_to_one();
  const bool has_free = spec.unconstrained_count() > 0;
  if (cmp > 0) {
    report.reason = "Kraft sum of constrained lengths " + report.kraft_sum.to_string() +
                    " exceeds 1";
  } else if (cmp == 0 && has_free) {
    report.reason = "constrained lengths fill the code space; no room for " +
                    std::to_string(spec.unconstrained_count()) + " unconstrained symbol(s)";
  } else {
    report.feasible = true;
  }
  return report;
}

void require_feasible(const SourceSpec& spec) {
  auto report = check_feasibility(spec);
  if (!report.feasible) {
    throw InfeasibleError("impossible: " + report.reason);
  }
}

std::vector<double> SortedViews::descending_probabilities() const {
  std::vector<double> out;
  out.reserve(unconstrained.size());
  for (const auto& e : unconstrained) out.push_back(e.probability);
  return out;
}

SortedViews sorted_views(const SourceSpec& spec) {
  SortedViews views;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (const auto& len = spec.symbol(i).length) {
      views.constrained.push_back({i, *len});
    } else {
      views.unconstrained.push_back({i, spec.probability(i)});
    }
  }
  std::stable_sort(views.constrained.begin(), views.constrained.end(),
                   [](const auto& a, const auto& b) { return a.length < b.length; });
  std::stable_sort(views.unconstrained.begin(), views.unconstrained.end(),
                   [](const auto& a, const auto& b) { return a.probability > b.probability; });
  return views;
}

}  // namespace eqhuff
