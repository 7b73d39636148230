// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eqhuff/bounds.hpp"
#include "eqhuff/codec.hpp"
#include "eqhuff/dp.hpp"
#include "eqhuff/oracle.hpp"
#include "eqhuff/stubs.hpp"
#include "support/instances.hpp"

using namespace eqhuff;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome worked_example_exact() {
  const auto start = Clock::now();
  const auto spec = eqhuff::testing::worked_example();
  const auto sol = solve(spec);
  const double elapsed = seconds_since(start);

  std::vector<std::size_t> lengths;
  for (const auto& e : sol.codebook.entries()) lengths.push_back(e.code.size());
  bool constrained_ok = true;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec.is_constrained(i) && sol.codebook[i].code.size() != 2) constrained_ok = false;
  }
  auto sorted = lengths;
  std::sort(sorted.begin(), sorted.end());

  Outcome o;
  o.pass = std::abs(sol.expected_length - 2.5) <= 1e-9 &&
           sorted == std::vector<std::size_t>{2, 2, 2, 3, 3} && constrained_ok && elapsed < 0.1;
  o.detail = "L=" + fmt("%.12g", sol.expected_length) + " time=" + fmt("%.3g", elapsed * 1e3) +
             "ms";
  return o;
}

Outcome worked_example_bounds() {
  const auto spec = eqhuff::testing::worked_example();
  const auto sol = solve(spec);
  const auto& b = sol.bounds;
  const double tol = 5e-3;
  Outcome o;
  o.pass = std::abs(b.entropy - 2.1219) <= tol && std::abs(b.constrained_entropy - 2.3610) <= tol &&
           std::abs(b.redundancy() - 0.2390) <= tol && std::abs(sol.gap() - 0.1390) <= tol;
  o.detail = "H=" + fmt("%.4f", b.entropy) + " H(X,L)=" + fmt("%.4f", b.constrained_entropy) +
             " redundancy=" + fmt("%.4f", b.redundancy()) + " gap=" + fmt("%.4f", sol.gap());
  return o;
}

Outcome unconstrained_example() {
  const auto sol = solve(eqhuff::testing::worked_example_unconstrained());
  Outcome o;
  o.pass = std::abs(sol.expected_length - 2.2) <= 1e-9;
  o.detail = "L=" + fmt("%.12g", sol.expected_length);
  return o;
}

// Random feasible instances with n <= 10, shared by criteria 4, 6 and 7.
std::vector<SourceSpec> oracle_instances() {
  std::mt19937_64 rng(20240601);
  std::vector<SourceSpec> out;
  for (int i = 0; i < 600; ++i) {
    out.push_back(eqhuff::testing::random_instance(
        rng, {.min_n = 2, .max_n = 10, .max_length = 5, .max_divisions = 20000}));
  }
  return out;
}

Outcome oracle_equivalence(const std::vector<SourceSpec>& instances) {
  const auto start = Clock::now();
  int mismatches = 0;
  int multi_stub = 0;
  double worst = 0.0;
  for (const auto& spec : instances) {
    if (spec.unconstrained_count() > 1 && eqhuff::testing::stub_count(spec) > 1) ++multi_stub;
    const double dp = solve(spec).expected_length;
    const double div = exhaustive_division_solve(spec).best_cost;
    const double con = contiguous_partition_solve(spec).best_cost;
    const double err = std::max(std::abs(dp - div), std::abs(dp - con));
    worst = std::max(worst, err);
    if (err > 1e-9) ++mismatches;
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = instances.size() >= 500 && mismatches == 0 && elapsed < 60.0;
  o.detail = std::to_string(instances.size()) + " instances (" + std::to_string(multi_stub) +
             " with several stubs), " + std::to_string(mismatches) + " mismatches, max err " +
             fmt("%.3g", worst) + ", " + fmt("%.2f", elapsed) + "s";
  return o;
}

Outcome huffman_degeneration() {
  std::mt19937_64 rng(77);
  int mismatches = 0;
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto spec = eqhuff::testing::random_unconstrained(rng, 2, 64);
    const auto views = sorted_views(spec);
    const double direct = huffman_lengths(views.descending_probabilities()).cost;
    const double err = std::abs(solve(spec).expected_length - direct);
    worst = std::max(worst, err);
    if (err > 1e-9) ++mismatches;
  }
  Outcome o;
  o.pass = mismatches == 0;
  o.detail = "1000 instances, " + std::to_string(mismatches) + " mismatches, max err " +
             fmt("%.3g", worst);
  return o;
}

Outcome sandwich(const std::vector<SourceSpec>& instances) {
  std::mt19937_64 rng(99);
  std::vector<SourceSpec> all = instances;
  for (int t = 0; t < 1000; ++t) {
    all.push_back(eqhuff::testing::random_instance(
        rng, {.min_n = 2, .max_n = 40, .max_length = 8, .max_divisions = 0}));
  }
  int violations = 0;
  for (const auto& spec : all) {
    const auto sol = solve(spec);
    const auto& b = sol.bounds;
    const bool ok = b.constrained_entropy <= sol.expected_length + 1e-9 &&
                    sol.expected_length <= b.witness_cost + 1e-9 &&
                    b.witness_cost < b.constrained_entropy + 1.0;
    if (!ok) ++violations;
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(all.size()) + " instances, " + std::to_string(violations) +
             " violations";
  return o;
}

Outcome structural(const std::vector<SourceSpec>& instances) {
  int bad_codes = 0;
  int bad_tiling = 0;
  for (const auto& spec : instances) {
    const auto sol = solve(spec);
    if (!sol.codebook.is_prefix_free() || sol.codebook.kraft().compare_to_one() > 0 ||
        !validate_codebook(spec, sol.codebook).empty()) {
      ++bad_codes;
    }
    if (spec.unconstrained_count() == 0) continue;
    std::vector<int> lengths;
    for (const auto& s : spec.symbols()) {
      if (s.length) lengths.push_back(*s.length);
    }
    for (const auto& s : free_stub_levels(spec).stubs) lengths.push_back(s.level);
    if (kraft_sum(lengths).compare_to_one() != 0) ++bad_tiling;
  }

  std::mt19937_64 rng(4242);
  int bad_round_trips = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto& spec = instances[static_cast<std::size_t>(t) % instances.size()];
    const auto sol = solve(spec);
    std::uniform_int_distribution<std::size_t> pick(0, spec.size() - 1);
    std::vector<std::string> seq(1 + t % 200);
    for (auto& s : seq) s = spec.symbol(pick(rng)).id;
    std::stringstream file;
    write_stream(file, encode(sol.codebook, seq), seq.size());
    const auto read = read_stream(file);
    if (decode(sol.codebook, read.stream, read.count) != seq) ++bad_round_trips;
  }
  Outcome o;
  o.pass = bad_codes == 0 && bad_tiling == 0 && bad_round_trips == 0;
  o.detail = std::to_string(bad_codes) + " bad codebooks, " + std::to_string(bad_tiling) +
             " tiling failures, " + std::to_string(bad_round_trips) + "/1000 round-trip failures";
  return o;
}

// Constraints on four symbols leave stubs at several levels.
SourceSpec scaling_instance(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> w(0.01, 1.0);
  std::vector<double> weights(n);
  for (auto& x : weights) x = w(rng);
  std::vector<std::optional<int>> lengths(n);
  lengths[0] = 3;
  lengths[1] = 5;
  lengths[2] = 7;
  lengths[3] = 9;
  return eqhuff::testing::make_spec(weights, lengths);
}

double best_time(const SourceSpec& spec, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    const auto sol = solve(spec);
    const double t = seconds_since(start);
    if (sol.codebook.size() != spec.size()) return 1e300;
    best = std::min(best, t);
  }
  return best;
}

Outcome complexity() {
  const auto small = scaling_instance(200);
  const auto large = scaling_instance(400);
  const double t200 = best_time(small, 5);
  const double t400 = best_time(large, 5);
  const double ratio = t400 / t200;
  Outcome o;
  o.pass = ratio <= 12.0 && t200 < 10.0 && t400 < 10.0;
  o.detail = "t(200)=" + fmt("%.4f", t200) + "s t(400)=" + fmt("%.4f", t400) +
             "s ratio=" + fmt("%.2f", ratio) + " (stubs=" +
             std::to_string(free_stub_levels(large).size()) + ")";
  return o;
}

}  // namespace

int main() {
  const auto instances = oracle_instances();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 worked example exact (L=2.5, lengths {2,2,2,3,3}, <100ms)", worked_example_exact},
      {"2 worked example bounds (H, H(X,L), redundancy, gap; tol 5e-3)", worked_example_bounds},
      {"3 unconstrained worked example (L=2.2)", unconstrained_example},
      {"4 oracle equivalence (>=500 instances, n<=10, 1e-9, <60s)",
       [&] { return oracle_equivalence(instances); }},
      {"5 Huffman degeneration (1000 instances, n<=64, 1e-9)", huffman_degeneration},
      {"6 sandwich H(X,L) <= L <= witness < H(X,L)+1", [&] { return sandwich(instances); }},
      {"7 structural invariants (prefix-free, Kraft, tiling, codec)",
       [&] { return structural(instances); }},
      {"8 complexity smoke test (t400 <= 12 t200, both <10s)", complexity},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %s -- %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
