#include "eqhuff/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "eqhuff/codec.hpp"

namespace eqhuff::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string slurp(std::istream& is) {
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

std::string read_text(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return slurp(in);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  return slurp(f);
}

std::string fixed4(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

void print_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

Json codebook_json(const Codebook& codebook) {
  Json arr = Json::array();
  for (const auto& e : codebook.entries()) arr.push_back({{"id", e.id}, {"code", e.code}});
  return arr;
}

void print_codebook_table(std::ostream& out, const SourceSpec& spec, const Codebook& codebook) {
  out << std::left << std::setw(16) << "id" << std::setw(12) << "probability" << std::setw(8)
      << "length" << "code\n";
  for (std::size_t i = 0; i < codebook.size(); ++i) {
    const auto& e = codebook[i];
    const auto idx = spec.find(e.id);
    out << std::left << std::setw(16) << e.id << std::setw(12)
        << fixed4(idx ? spec.probability(*idx) : 0.0) << std::setw(8) << e.code.size() << e.code
        << '\n';
  }
}

void write_dot(const std::string& path, const SourceSpec& spec, const Codebook& codebook,
               const StubSet& stubs) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << code_tree_dot(spec, codebook, stubs);
}

int do_solve(const CliConfig& cfg, const SourceSpec& spec, std::ostream& out) {
  const Solution sol = solve(spec);
  if (cfg.format == Format::kJson) {
    print_json(out, solution_json(spec, sol, cfg.debug_stubs));
  } else {
    print_codebook_table(out, spec, sol.codebook);
    out << "\nexpected_length      " << fixed4(sol.expected_length) << '\n'
        << "entropy              " << fixed4(sol.bounds.entropy) << '\n'
        << "constrained_entropy  " << fixed4(sol.bounds.constrained_entropy) << '\n'
        << "gap                  " << fixed4(sol.gap()) << '\n'
        << "witness_cost         " << fixed4(sol.bounds.witness_cost) << '\n';
    for (const auto& seg : sol.partition) {
      out << "stub level " << seg.stub_level << ": positions " << seg.first + 1 << ".."
          << seg.last << '\n';
    }
    if (cfg.debug_stubs) {
      for (const auto& s : sol.stubs.stubs) {
        out << "free stub level " << s.level << " prefix '" << s.prefix << "'\n";
      }
    }
  }
  if (!cfg.dot_path.empty()) write_dot(cfg.dot_path, spec, sol.codebook, sol.stubs);
  return kExitOk;
}

int do_bounds(const CliConfig& cfg, const SourceSpec& spec, std::ostream& out) {
  const auto report = constrained_entropy(spec);
  if (cfg.format == Format::kJson) {
    print_json(out, bounds_json(report));
    return kExitOk;
  }
  out << "entropy                     " << fixed4(report.entropy) << '\n'
      << "big_p                       " << fixed4(report.big_p) << '\n'
      << "big_q                       " << fixed4(report.big_q) << '\n'
      << "constrained_entropy         " << fixed4(report.constrained_entropy) << '\n'
      << "redundancy_constraint_term  " << fixed4(report.redundancy_constraint_term) << '\n'
      << "redundancy_partition_term   " << fixed4(report.redundancy_partition_term) << '\n'
      << "witness_cost                " << fixed4(report.witness_cost) << '\n';
  out << std::left << std::setw(16) << "id" << std::setw(12) << "ideal" << "witness\n";
  for (std::size_t i = 0; i < spec.size(); ++i) {
    out << std::left << std::setw(16) << spec.symbol(i).id << std::setw(12)
        << fixed4(report.ideal_lengths[i]) << report.witness_lengths[i] << '\n';
  }
  return kExitOk;
}

int do_oracle(const CliConfig& cfg, const SourceSpec& spec, std::ostream& out) {
  const OracleResult res = cfg.method == OracleMethod::kDivision
                               ? exhaustive_division_solve(spec, cfg.budget)
                               : contiguous_partition_solve(spec, cfg.budget);
  const auto views = sorted_views(spec);
  StubSet stubs;
  if (spec.unconstrained_count() > 0) stubs = free_stub_levels(spec);
  if (stubs.size() != res.stub_levels.size()) {
    throw std::logic_error("oracle: stub levels disagree with the stub module");
  }
  std::vector<std::vector<std::size_t>> groups(stubs.size());
  for (std::size_t pos = 0; pos < views.unconstrained.size(); ++pos) {
    const int k = res.best_assignment[views.unconstrained[pos].index];
    groups.at(static_cast<std::size_t>(k)).push_back(pos);
  }
  const Codebook codebook =
      assemble_codebook(spec, views, stubs, groups, constrained_codewords(spec));
  const auto bounds = constrained_entropy(spec);
  const double length = expected_length(spec, codebook);

  if (cfg.format == Format::kJson) {
    Json doc;
    doc["codebook"] = codebook_json(codebook);
    doc["expected_length"] = round_sig(length);
    doc["entropy"] = round_sig(bounds.entropy);
    doc["constrained_entropy"] = round_sig(bounds.constrained_entropy);
    doc["witness_cost"] = round_sig(bounds.witness_cost);
    Json assignment = Json::array();
    for (std::size_t i = 0; i < spec.size(); ++i) {
      const int k = res.best_assignment[i];
      if (k < 0) continue;
      assignment.push_back(
          {{"id", spec.symbol(i).id}, {"stub_level", res.stub_levels[static_cast<std::size_t>(k)]}});
    }
    doc["assignment"] = assignment;
    doc["evaluations"] = res.evaluations;
    print_json(out, doc);
  } else {
    print_codebook_table(out, spec, codebook);
    out << "\nexpected_length  " << fixed4(length) << '\n'
        << "evaluations      " << res.evaluations << '\n';
  }
  if (!cfg.dot_path.empty()) write_dot(cfg.dot_path, spec, codebook, stubs);
  return kExitOk;
}

std::vector<std::string> read_ids(const std::string& text) {
  std::istringstream is(text);
  return {std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
}

int do_encode(const CliConfig& cfg, const SourceSpec& spec, std::istream& in, std::ostream& err) {
  const Solution sol = solve(spec);
  const auto ids = read_ids(read_text(cfg.symbols_path, in));
  const Bitstream stream = encode(sol.codebook, ids);
  std::ofstream f(cfg.output_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + cfg.output_path + "'");
  write_stream(f, stream, ids.size());
  err << "encoded " << ids.size() << " symbols into " << stream.bit_count << " bits\n";
  return kExitOk;
}

int do_decode(const CliConfig& cfg, const SourceSpec& spec, std::ostream& out) {
  const Solution sol = solve(spec);
  std::ifstream f(cfg.stream_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + cfg.stream_path + "'");
  const StreamFile file = read_stream(f);
  const auto ids = decode(sol.codebook, file.stream, file.count);
  std::ofstream file_out;
  std::ostream* os = &out;
  if (!cfg.output_path.empty()) {
    file_out.open(cfg.output_path);
    if (!file_out) throw std::runtime_error("cannot write '" + cfg.output_path + "'");
    os = &file_out;
  }
  for (const auto& id : ids) *os << id << '\n';
  return kExitOk;
}

int do_check(const CliConfig& cfg, const SourceSpec& spec, std::istream& in, std::ostream& out) {
  const Codebook codebook = parse_codebook(read_text(cfg.codebook_path, in));
  const auto problems = validate_codebook(spec, codebook);
  const auto kraft = codebook.kraft();
  if (cfg.format == Format::kJson) {
    Json doc;
    doc["valid"] = problems.empty();
    doc["kraft_sum"] = round_sig(kraft.to_double());
    doc["problems"] = problems;
    if (problems.empty()) doc["expected_length"] = round_sig(expected_length(spec, codebook));
    print_json(out, doc);
  } else {
    out << (problems.empty() ? "valid" : "invalid") << '\n';
    for (const auto& p : problems) out << "  " << p << '\n';
  }
  return problems.empty() ? kExitOk : kExitError;
}

}  // namespace

double round_sig(double v, int digits) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

Json stubs_json(const StubSet& stubs) {
  Json arr = Json::array();
  for (const auto& s : stubs.stubs) arr.push_back({{"level", s.level}, {"prefix", s.prefix}});
  return arr;
}

Json solution_json(const SourceSpec& spec, const Solution& sol, bool with_stubs) {
  (void)spec;
  Json doc;
  doc["codebook"] = codebook_json(sol.codebook);
  doc["expected_length"] = round_sig(sol.expected_length);
  doc["entropy"] = round_sig(sol.bounds.entropy);
  doc["constrained_entropy"] = round_sig(sol.bounds.constrained_entropy);
  doc["witness_cost"] = round_sig(sol.bounds.witness_cost);
  Json partition = Json::array();
  for (const auto& seg : sol.partition) {
    partition.push_back({{"stub_level", seg.stub_level}, {"from", seg.first + 1}, {"to", seg.last}});
  }
  doc["partition"] = partition;
  if (with_stubs) doc["stubs"] = stubs_json(sol.stubs);
  return doc;
}

Json bounds_json(const BoundsReport& r) {
  Json doc;
  doc["entropy"] = round_sig(r.entropy);
  doc["big_p"] = round_sig(r.big_p);
  doc["big_q"] = round_sig(r.big_q);
  doc["constrained_entropy"] = round_sig(r.constrained_entropy);
  doc["redundancy_constraint_term"] = round_sig(r.redundancy_constraint_term);
  doc["redundancy_partition_term"] = round_sig(r.redundancy_partition_term);
  Json ideal = Json::array();
  for (double v : r.ideal_lengths) ideal.push_back(round_sig(v));
  doc["ideal_lengths"] = ideal;
  doc["witness_lengths"] = r.witness_lengths;
  doc["witness_cost"] = round_sig(r.witness_cost);
  return doc;
}

std::string code_tree_dot(const SourceSpec& spec, const Codebook& codebook, const StubSet& stubs) {
  // Node per distinct prefix of every code word and stub prefix.
  std::map<std::string, std::size_t> node_id;
  std::map<std::string, std::string> leaf_label;
  std::map<std::string, int> stub_level;
  auto add_path = [&](const std::string& bits) {
    for (std::size_t n = 0; n <= bits.size(); ++n) {
      node_id.emplace(bits.substr(0, n), node_id.size());
    }
  };
  for (const auto& e : codebook.entries()) {
    add_path(e.code);
    char buf[64];
    const auto idx = spec.find(e.id);
    std::snprintf(buf, sizeof buf, "%.4g", idx ? spec.probability(*idx) : 0.0);
    leaf_label[e.code] = e.id + ":" + buf;
  }
  for (const auto& s : stubs.stubs) {
    add_path(s.prefix);
    stub_level[s.prefix] = s.level;
  }

  auto on_stub_path = [&](const std::string& bits) {
    for (const auto& s : stubs.stubs) {
      if (s.prefix.size() >= bits.size() && s.prefix.compare(0, bits.size(), bits) == 0) {
        return true;
      }
    }
    return false;
  };
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q.push_back('\\');
      q.push_back(c);
    }
    return q + "\"";
  };

  std::ostringstream os;
  os << "digraph code_tree {\n  node [shape=point];\n";
  for (const auto& [bits, id] : node_id) {
    os << "  n" << id;
    if (const auto it = leaf_label.find(bits); it != leaf_label.end()) {
      os << " [shape=ellipse, label=" << quote(it->second) << "]";
    } else if (const auto st = stub_level.find(bits); st != stub_level.end()) {
      os << " [shape=box, label=" << quote("stub h=" + std::to_string(st->second)) << "]";
    } else if (bits.empty()) {
      os << " [shape=circle, label=\"root\"]";
    }
    os << ";\n";
  }
  for (const auto& [bits, id] : node_id) {
    if (bits.empty()) continue;
    const auto parent = node_id.at(bits.substr(0, bits.size() - 1));
    os << "  n" << parent << " -> n" << id << " [label=\"" << bits.back() << "\"";
    if (on_stub_path(bits)) os << ", style=bold";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

Codebook parse_codebook(const std::string& document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed codebook: ") + e.what());
  }
  const nlohmann::json* arr = &doc;
  if (doc.is_object()) {
    if (!doc.contains("codebook")) throw ParseError("codebook: missing 'codebook' array");
    arr = &doc.at("codebook");
  }
  if (!arr->is_array()) throw ParseError("codebook: expected an array");
  std::vector<CodeEntry> entries;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const auto& item = (*arr)[i];
    if (!item.is_object() || !item.contains("id") || !item.at("id").is_string() ||
        !item.contains("code") || !item.at("code").is_string()) {
      throw ParseError("codebook[" + std::to_string(i) + "]: expected {\"id\", \"code\"} strings");
    }
    entries.push_back({item.at("id").get<std::string>(), item.at("code").get<std::string>()});
  }
  return Codebook(std::move(entries));
}

int run(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    const SourceSpec spec = parse_spec(read_text(cfg.input, in));
    switch (cfg.command) {
      case Command::kSolve: return do_solve(cfg, spec, out);
      case Command::kBounds: return do_bounds(cfg, spec, out);
      case Command::kOracle: return do_oracle(cfg, spec, out);
      case Command::kEncode: return do_encode(cfg, spec, in, err);
      case Command::kDecode: return do_decode(cfg, spec, out);
      case Command::kCheck: return do_check(cfg, spec, in, out);
    }
  } catch (const InfeasibleError& e) {
    err << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Optimal prefix codes with prescribed code-word lengths", "eqhuff"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"json", Format::kJson}, {"table", Format::kTable}};
  const std::map<std::string, OracleMethod> methods{{"contiguous", OracleMethod::kContiguous},
                                                    {"division", OracleMethod::kDivision}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Spec document (JSON); '-' reads stdin")
        ->default_val("-");
    sub->add_option("-f,--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* solve_cmd = app.add_subcommand("solve", "Compute the optimal constrained code");
  add_common(solve_cmd);
  solve_cmd->add_option("--dot", cfg.dot_path, "Write the code tree as Graphviz DOT");
  solve_cmd->add_flag("--debug-stubs", cfg.debug_stubs, "Include the free stubs in the output");

  auto* bounds_cmd = app.add_subcommand("bounds", "Entropy bounds and the witness code");
  add_common(bounds_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference solution");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--budget", cfg.budget, "Maximum candidates to enumerate")
      ->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--method", cfg.method, "contiguous or division")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  oracle_cmd->add_option("--dot", cfg.dot_path, "Write the code tree as Graphviz DOT");

  auto* encode_cmd = app.add_subcommand("encode", "Encode whitespace-separated symbol ids");
  encode_cmd->add_option("input", cfg.input, "Spec document (JSON)")->required();
  encode_cmd->add_option("-s,--symbols", cfg.symbols_path, "Symbol ids; '-' reads stdin")
      ->default_val("-");
  encode_cmd->add_option("-o,--output", cfg.output_path, "Stream file to write")->required();

  auto* decode_cmd = app.add_subcommand("decode", "Decode a stream file to symbol ids");
  decode_cmd->add_option("input", cfg.input, "Spec document (JSON)")->required();
  decode_cmd->add_option("-i,--stream", cfg.stream_path, "Stream file to read")->required();
  decode_cmd->add_option("-o,--output", cfg.output_path, "Write ids here instead of stdout");

  auto* check_cmd = app.add_subcommand("check", "Validate a codebook against a spec");
  add_common(check_cmd);
  check_cmd->add_option("-c,--codebook", cfg.codebook_path, "Codebook or solve output (JSON)")
      ->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  if (solve_cmd->parsed()) cfg.command = Command::kSolve;
  if (bounds_cmd->parsed()) cfg.command = Command::kBounds;
  if (oracle_cmd->parsed()) cfg.command = Command::kOracle;
  if (encode_cmd->parsed()) cfg.command = Command::kEncode;
  if (decode_cmd->parsed()) cfg.command = Command::kDecode;
  if (check_cmd->parsed()) cfg.command = Command::kCheck;

  if (cfg.command == Command::kEncode && cfg.input == "-" && cfg.symbols_path == "-") {
    err << "error: spec and symbols cannot both come from stdin\n";
    return kExitError;
  }
  if (cfg.command == Command::kCheck && cfg.input == "-" && cfg.codebook_path == "-") {
    err << "error: spec and codebook cannot both come from stdin\n";
    return kExitError;
  }
  return run(cfg, in, out, err);
}

}  // namespace eqhuff::cli
