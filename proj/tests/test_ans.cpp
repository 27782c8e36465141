// Copyright 2026 The permucodec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "permucodec/ans.hpp"
#include "permucodec/error.hpp"

using namespace permucodec;

namespace {

QuantizedDist<char> abc() { return QuantizedDist<char>({{'a', 2}, {'b', 1}, {'c', 1}}); }

std::vector<std::uint64_t> run(std::uint64_t s0, const std::string& xs) {
  AnsState s(s0);
  const auto d = abc();
  std::vector<std::uint64_t> states;
  for (char x : xs) {
    ans_encode(s, d, x);
    states.push_back(s.value().get_ui());
  }
  return states;
}

}  // namespace

TEST_CASE("single encodes from small states") {
  CHECK(run(5, "a") == std::vector<std::uint64_t>{9});
  CHECK(run(5, "b") == std::vector<std::uint64_t>{22});
  CHECK(run(5, "c") == std::vector<std::uint64_t>{23});
  CHECK(run(20, "a") == std::vector<std::uint64_t>{40});
  CHECK(run(20, "b") == std::vector<std::uint64_t>{82});
  CHECK(run(20, "c") == std::vector<std::uint64_t>{83});
  CHECK(ans_encode(mpz_class(5), Range{2, 0}, 4) == 9);
}

TEST_CASE("sequence table for all orderings of aabc") {
  const std::vector<std::pair<std::string, std::vector<std::uint64_t>>> table = {
      {"aabc", {40, 80, 322, 1291}},  {"aacb", {40, 80, 323, 1294}},
      {"abac", {40, 162, 324, 1299}}, {"abca", {40, 162, 651, 1301}},
      {"acab", {40, 163, 325, 1302}}, {"acba", {40, 163, 654, 1308}},
      {"baac", {82, 164, 328, 1315}}, {"baca", {82, 164, 659, 1317}},
      {"bcaa", {82, 331, 661, 1321}}, {"caab", {83, 165, 329, 1318}},
      {"caba", {83, 165, 662, 1324}}, {"cbaa", {83, 334, 668, 1336}},
  };
  for (const auto& [xs, states] : table) {
    CAPTURE(xs);
    CHECK(run(20, xs) == states);
  }
  CHECK(run(20, "").empty());
}

TEST_CASE("decode inverts encode") {
  const auto d = abc();
  AnsState s(9);
  CHECK(ans_decode(s, d) == 'a');
  CHECK(s == AnsState(5));
  AnsState t(1291);
  CHECK(ans_decode(t, d) == 'c');
  CHECK(t == AnsState(322));
  AnsState z(0);
  CHECK(ans_decode(z, d) == 'a');
  CHECK(z == AnsState(0));
}

TEST_CASE("decode_sequence returns encode order") {
  const auto d = abc();
  AnsState s(20);
  const std::string xs = "cbaa";
  encode_sequence(s, std::span<const char>(xs.data(), xs.size()), d);
  CHECK(s == AnsState(1336));
  const auto back = decode_sequence(s, 4, d);
  CHECK(std::string(back.begin(), back.end()) == xs);
  CHECK(s == AnsState(20));
}

TEST_CASE("per-step distributions") {
  const std::vector<QuantizedDist<std::uint64_t>> dists = {
      QuantizedDist<std::uint64_t>::dense(std::vector<std::uint64_t>{1, 3}),
      QuantizedDist<std::uint64_t>::dense(std::vector<std::uint64_t>{5, 1, 2})};
  const std::vector<std::uint64_t> xs = {1, 2};
  AnsState s(100);
  encode_sequence<std::uint64_t>(s, xs, dists);
  const mpz_class expected = oracle::encode(oracle::encode(100, 3, 1, 4), 2, 6, 8);
  CHECK(s.value() == expected);
  CHECK_THROWS_AS(encode_sequence<std::uint64_t>(s, xs, std::span(dists).first(1)), InvalidArgument);
}

TEST_CASE("random round trips against the oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t k = 1 + rng() % 12;
    std::vector<std::uint64_t> w(k);
    for (auto& x : w) x = 1 + rng() % 1000;
    const auto d = QuantizedDist<std::uint64_t>::dense(w);
    mpz_class start(static_cast<unsigned long>(rng()));
    start *= static_cast<unsigned long>(rng());
    const std::uint64_t x = rng() % k;
    AnsState s(start);
    ans_encode(s, d, x);
    const Range r = d.forward_lookup(x);
    REQUIRE(s.value() == oracle::encode(start, r.freq, r.start, d.precision()));
    REQUIRE(ans_decode(s, d) == x);
    REQUIRE(s.value() == start);
    const auto [sym, next] = oracle::decode(start, w);
    AnsState u(start);
    REQUIRE(ans_decode(u, d) == sym);
    REQUIRE(u.value() == next);
    ans_encode(u, d, sym);
    REQUIRE(u.value() == start);
  }
}

TEST_CASE("state change stays inside the sandwich bound") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5000; ++trial) {
    std::vector<std::uint64_t> w = {1 + rng() % 50, 1 + rng() % 50, 1 + rng() % 50};
    const auto d = QuantizedDist<std::uint64_t>::dense(w);
    const std::uint64_t s0 = 1 + rng() % 100000;
    const std::uint64_t x = rng() % 3;
    AnsState s(s0);
    ans_encode(s, d, x);
    const double n = static_cast<double>(d.precision());
    const double inv_p = n / static_cast<double>(w[x]);
    const double ratio = s.value().get_d() / static_cast<double>(s0);
    const double lo = inv_p - n / static_cast<double>(s0);
    CHECK(ratio <= inv_p + n / static_cast<double>(s0) + 1e-12);
    if (lo > 0) CHECK(ratio >= lo - 1e-12);
  }
}

TEST_CASE("decoding a window of m N states samples exactly") {
  const std::vector<std::uint64_t> w = {3, 1, 4, 1, 5};
  const auto d = QuantizedDist<std::uint64_t>::dense(w);
  const std::uint64_t n = d.precision();
  for (std::uint64_t k : {0ULL, 7ULL, 1000ULL}) {
    for (std::uint64_t m : {1ULL, 3ULL}) {
      std::vector<std::uint64_t> counts(w.size(), 0);
      for (std::uint64_t u = k; u < k + m * n; ++u) {
        AnsState s(u);
        ++counts[ans_decode(s, d)];
      }
      for (std::size_t i = 0; i < w.size(); ++i) CHECK(counts[i] == m * w[i]);
    }
  }
}

TEST_CASE("uniform codec") {
  AnsState s(5);
  uniform_encode(s, 3, 8);
  CHECK(s == AnsState(43));
  CHECK(uniform_decode(s, 8) == 3);
  CHECK(s == AnsState(5));
  AnsState z(0);
  uniform_encode(z, 0, 2);
  CHECK(z == AnsState(0));
  CHECK_THROWS_AS(uniform_encode(s, 8, 8), InvalidArgument);
  CHECK_THROWS_AS(uniform_encode(s, 0, 0), InvalidArgument);
}

TEST_CASE("byte records") {
  AnsState s = AnsState::seeded();
  const AnsState s0 = s;
  bytes_encode(s, "ab", 255);
  CHECK(bytes_decode(s, 255) == "ab");
  CHECK(s == s0);

  AnsState t(12345);
  bytes_encode(t, "", 255);
  CHECK(t == AnsState(12345ULL * 256));
  CHECK_THROWS_AS(bytes_encode(t, std::string(300, 'x'), 255), InvalidArgument);

  // Bytes under uniform(256) then the length: same as the generic codec.
  AnsState u(999);
  bytes_encode(u, "xyz", 1000);
  mpz_class v = 999;
  for (char c : std::string("zyx")) v = oracle::encode(v, 1, static_cast<unsigned char>(c), 256);
  v = oracle::encode(v, 1, 3, 1001);
  CHECK(u.value() == v);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::string r(rng() % 40, '\0');
    for (auto& c : r) c = static_cast<char>(rng());
    AnsState a = AnsState::seeded();
    const std::size_t before = a.bit_length();
    bytes_encode(a, r, 65535);
    const double growth = static_cast<double>(a.bit_length() - before);
    CHECK(std::abs(growth - (8.0 * r.size() + std::log2(65536.0))) <= 1.0);
    CHECK(bytes_decode(a, 65535) == r);
    CHECK(a == AnsState::seeded());
  }
}

TEST_CASE("state serialization") {
  CHECK(state_serialize(AnsState(1291)) == std::vector<std::uint8_t>{0x05, 0x0B});
  CHECK(state_serialize(AnsState(0)) == std::vector<std::uint8_t>{0x00});
  CHECK(state_deserialize(std::vector<std::uint8_t>{0x05, 0x0B}) == AnsState(1291));
  CHECK(state_deserialize(std::vector<std::uint8_t>{0x00}) == AnsState(0));
  CHECK_THROWS_AS(state_deserialize(std::vector<std::uint8_t>{0x00, 0x01}), CorruptMessage);
  CHECK_THROWS_AS(state_deserialize(std::vector<std::uint8_t>{}), CorruptMessage);
  const AnsState big = AnsState::seeded(200);
  CHECK(state_deserialize(state_serialize(big)) == big);
  CHECK(big.bit_length() == 201);
}

TEST_CASE("distribution validation") {
  CHECK_THROWS_AS(QuantizedDist<int>({{1, 1}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(QuantizedDist<int>({{1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(QuantizedDist<int>(std::vector<std::pair<int, std::uint64_t>>{}), InvalidArgument);
  CHECK_THROWS_AS(QuantizedDist<int>({{1, UINT64_MAX}, {2, 1}}), InvalidArgument);
  const auto d = abc();
  CHECK_THROWS_AS(d.forward_lookup('z'), InvalidArgument);
  CHECK_THROWS_AS(d.reverse_lookup(4), InvalidArgument);
  CHECK(d.probability('a') == doctest::Approx(0.5));
  CHECK_THROWS_AS(AnsState(mpz_class(-1)), InvalidArgument);
}
