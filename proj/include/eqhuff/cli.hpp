#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqhuff/bounds.hpp"
#include "eqhuff/dp.hpp"
#include "eqhuff/oracle.hpp"

namespace eqhuff::cli {

enum class Command { kSolve, kBounds, kOracle, kEncode, kDecode, kCheck };
enum class Format { kJson, kTable };
enum class OracleMethod { kContiguous, kDivision };

struct CliConfig {
  Command command = Command::kSolve;
  // Spec document path; "-" reads standard input.
  std::string input = "-";
  Format format = Format::kJson;
  std::string dot_path;
  bool debug_stubs = false;
  std::uint64_t budget = kDefaultOracleBudget;
  OracleMethod method = OracleMethod::kContiguous;
  // encode: whitespace-separated ids ("-" = standard input).
  std::string symbols_path;
  // encode: stream file to write. decode: decoded ids ("" = standard output).
  std::string output_path;
  // decode: stream file to read.
  std::string stream_path;
  // check: codebook document.
  std::string codebook_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 2;

// Parses argv (argv[0] is the program name) and runs. Diagnostics go to err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// 12 significant digits; the value nlohmann prints back is that decimal.
double round_sig(double v, int digits = 12);

nlohmann::ordered_json solution_json(const SourceSpec& spec, const Solution& sol,
                                     bool with_stubs);
nlohmann::ordered_json bounds_json(const BoundsReport& report);
nlohmann::ordered_json stubs_json(const StubSet& stubs);

// Directed graph of the whole code tree: code-word leaves labelled
// "id:probability", free stubs as boxes, stub paths in bold.
std::string code_tree_dot(const SourceSpec& spec, const Codebook& codebook, const StubSet& stubs);

Codebook parse_codebook(const std::string& document);

}  // namespace eqhuff::cli
