#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "eqhuff/codec.hpp"
#include "eqhuff/dp.hpp"
#include "support/instances.hpp"

using namespace eqhuff;
using eqhuff::testing::make_spec;

TEST_CASE("encode") {
  const auto sol = solve(eqhuff::testing::worked_example());
  SUBCASE("canonical worked-example words") {
    const auto bits = encode(sol.codebook, {"x2", "x4"});
    CHECK(bits.bit_count == 4);
    CHECK(bits.to_string() == "0010");
    REQUIRE(bits.payload.size() == 1);
    CHECK(bits.payload[0] == 0b00100000);
  }
  SUBCASE("empty input") {
    const auto bits = encode(sol.codebook, {});
    CHECK(bits.bit_count == 0);
    CHECK(bits.payload.empty());
  }
  SUBCASE("single-symbol codebook") {
    const Codebook cb(std::vector<CodeEntry>{{"a", "0"}});
    const auto bits = encode(cb, {"a", "a", "a"});
    CHECK(bits.to_string() == "000");
  }
  SUBCASE("unknown id") {
    try {
      encode(sol.codebook, {"x1", "nope"});
      FAIL("expected an error");
    } catch (const CodecError& e) {
      CHECK(std::string(e.what()).find("nope") != std::string::npos);
    }
  }
}

TEST_CASE("decode") {
  const auto sol = solve(eqhuff::testing::worked_example());
  const std::vector<std::string> seq{"x1", "x5", "x3", "x2", "x4", "x1"};
  const auto bits = encode(sol.codebook, seq);
  CHECK(decode(sol.codebook, bits, seq.size()) == seq);
  CHECK(decode(sol.codebook, bits, 0).empty());

  SUBCASE("truncated stream") {
    Bitstream cut = bits;
    cut.payload.pop_back();
    cut.bit_count = cut.payload.size() * 8;
    CHECK_THROWS_AS(decode(sol.codebook, cut, seq.size()), CodecError);
  }
  SUBCASE("bits matching no code word") {
    // Stub prefix 11 is fully used here, so take a code with a hole.
    const Codebook holey(std::vector<CodeEntry>{{"a", "0"}, {"b", "10"}});
    BitWriter w;
    w.put("11");
    CHECK_THROWS_AS(decode(holey, std::move(w).finish(), 1), CodecError);
  }
  SUBCASE("non-prefix-free codebook is rejected") {
    const Codebook bad(std::vector<CodeEntry>{{"a", "0"}, {"b", "01"}});
    CHECK_THROWS_AS(decode(bad, bits, 1), CodecError);
  }
}

TEST_CASE("round trip on random solved instances") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto spec = eqhuff::testing::random_instance(
        rng, {.min_n = 1, .max_n = 16, .max_length = 6, .max_divisions = 0});
    const auto sol = solve(spec);
    std::uniform_int_distribution<std::size_t> pick(0, spec.size() - 1);
    std::vector<std::string> seq(trial % 50);
    for (auto& s : seq) s = spec.symbol(pick(rng)).id;
    const auto bits = encode(sol.codebook, seq);
    CHECK(bits.bit_count <= 8 * bits.payload.size());
    CHECK(8 * bits.payload.size() < bits.bit_count + 8);
    CHECK(decode(sol.codebook, bits, seq.size()) == seq);
  }
}

TEST_CASE("stream file layout") {
  const auto sol = solve(eqhuff::testing::worked_example());
  const std::vector<std::string> seq{"x2", "x4", "x1"};
  const auto bits = encode(sol.codebook, seq);
  std::stringstream ss;
  write_stream(ss, bits, seq.size());
  const std::string raw = ss.str();
  REQUIRE(raw.size() == 8 + bits.payload.size());
  CHECK(static_cast<unsigned char>(raw[0]) == 3);
  for (int i = 1; i < 8; ++i) CHECK(raw[i] == 0);
  const auto file = read_stream(ss);
  CHECK(file.count == 3);
  CHECK(decode(sol.codebook, file.stream, file.count) == seq);

  std::stringstream short_header("abc");
  CHECK_THROWS_AS(read_stream(short_header), CodecError);
}

TEST_CASE("mean code length converges to the expected length") {
  const auto spec = make_spec({0.4, 0.2, 0.2, 0.1, 0.1}, {std::nullopt, 2, 2, 2, std::nullopt});
  const auto sol = solve(spec);
  std::mt19937_64 rng(2024);
  std::discrete_distribution<std::size_t> draw(spec.probabilities().begin(),
                                               spec.probabilities().end());
  const std::size_t n = 100000;
  std::vector<std::string> seq(n);
  double sq = 0.0;
  for (auto& s : seq) {
    const auto i = draw(rng);
    s = spec.symbol(i).id;
    const double len = static_cast<double>(sol.codebook[i].code.size());
    sq += len * len;
  }
  const auto bits = encode(sol.codebook, seq);
  const double mean = static_cast<double>(bits.bit_count) / n;
  const double var = sq / n - mean * mean;
  const double se = std::sqrt(var / n);
  CHECK(std::abs(mean - sol.expected_length) <= 3 * se);
}
