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

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "permucodec/rec.hpp"

using namespace permucodec;

namespace {

/// prod_v beta^(d_v) / (n beta)^(2m) by repeated multiplication.
mpq_class polya_joint(std::uint64_t n, const std::vector<Vertex>& seq, std::uint64_t beta) {
  std::vector<unsigned long> deg(n, 0);
  for (auto v : seq) ++deg[v];
  mpz_class num = 1;
  for (auto d : deg) num *= oracle::rising(beta, d);
  mpq_class q(num, oracle::rising(n * beta, seq.size()));
  q.canonicalize();
  return q;
}

/// Product of the step conditionals (count so far + beta) / (i + n beta).
mpq_class polya_chain(std::uint64_t n, const std::vector<Vertex>& seq, std::uint64_t beta) {
  std::vector<unsigned long> deg(n, 0);
  mpq_class q = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    q *= mpq_class(deg[seq[i]] + beta, i + n * beta);
    ++deg[seq[i]];
  }
  q.canonicalize();
  return q;
}

Graph random_multigraph(std::uint64_t n, std::uint64_t m, bool directed, std::mt19937_64& rng) {
  Graph g{n, directed, {}};
  for (std::uint64_t i = 0; i < m; ++i) g.edges.emplace_back(rng() % n, rng() % n);
  return g;
}

double measured(const AnsState& s) { return static_cast<double>(s.bit_length()) - 65.0; }

}  // namespace

TEST_CASE("edge sort") {
  const Graph g{5, false, {{3, 4}, {1, 2}, {3, 2}}};
  CHECK(edge_sort(g).edges == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(edge_sort(edge_sort(g)) == edge_sort(g));
  const Graph d{4, true, {{3, 1}, {1, 3}}};
  CHECK(edge_sort(d).edges == std::vector<Edge>{{1, 3}, {3, 1}});
}

TEST_CASE("urn context lookups") {
  PolyaContext ctx(3, 1);
  CHECK(ctx.precision() == 3);
  CHECK(ctx.range(2) == Range{1, 2});
  ctx.increment(1);
  ctx.increment(2);
  ctx.increment(2);
  CHECK(ctx.range(2) == Range{3, 3});
  CHECK(ctx.precision() == 6);
  for (std::uint64_t j = 0; j < 6; ++j) {
    const Vertex v = ctx.reverse_lookup(j);
    const Range r = ctx.range(v);
    CHECK(r.start <= j);
    CHECK(j < r.start + r.freq);
  }
  CHECK_THROWS_AS(ctx.range(3), InvalidArgument);
  CHECK_THROWS_AS(ctx.decrement(0), InvalidArgument);
}

TEST_CASE("urn reverse lookup covers every index for random contexts") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t n = 1 + rng() % 70;
    const std::uint64_t beta = 1 + rng() % 3;
    PolyaContext ctx(n, beta);
    for (int i = 0; i < 100; ++i) ctx.increment(rng() % n);
    std::uint64_t c = 0;
    for (Vertex v = 0; v < n; ++v) {
      const Range r = ctx.range(v);
      REQUIRE(r.start == c);
      for (std::uint64_t j = r.start; j < r.start + r.freq; ++j) REQUIRE(ctx.reverse_lookup(j) == v);
      c += r.freq;
    }
    REQUIRE(c == ctx.precision());
  }
}

TEST_CASE("joint equals the product of conditionals") {
  const std::vector<Vertex> seq = {0, 1, 1, 2, 1, 0};
  CHECK(polya_joint(3, seq, 1) == polya_chain(3, seq, 1));
  CHECK(polya_sequence_nll(3, seq, 1) == doctest::Approx(-oracle::log2q(polya_chain(3, seq, 1))));
  CHECK(polya_sequence_nll(7, std::vector<Vertex>{4}, 1) == doctest::Approx(std::log2(7.0)));

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t n = 1 + rng() % 10;
    const std::uint64_t beta = 1 + rng() % 4;
    std::vector<Vertex> s(rng() % 30);
    for (auto& v : s) v = rng() % n;
    const double nll = polya_sequence_nll(n, s, beta);
    CHECK(nll == doctest::Approx(-oracle::log2q(polya_chain(n, s, beta))));
    std::shuffle(s.begin(), s.end(), rng);
    CHECK(polya_sequence_nll(n, s, beta) == nll);
  }
}

TEST_CASE("round trips restore the edge multiset and the seed") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const bool directed = trial % 2 == 1;
    const std::uint64_t n = 1 + rng() % 200;
    const Graph g = random_multigraph(n, rng() % 2000, directed, rng);
    AnsState s = AnsState::seeded();
    rec_encode(s, g, 1);
    if (!g.edges.empty())
      CHECK(std::abs(measured(s) - graph_nll(g, 1)) <= 2.0);
    const Graph back = rec_decode(s, n, g.edge_count(), 1, directed);
    CHECK(back == edge_sort(g));
    CHECK(s == AnsState::seeded());
  }
}

TEST_CASE("empty graph") {
  AnsState s = AnsState::seeded();
  rec_encode(s, Graph{4, false, {}}, 1);
  CHECK(s == AnsState::seeded());
  CHECK(rec_decode(s, 4, 0, 1, false).edges.empty());
  CHECK(graph_nll(Graph{4, false, {}}, 1) == 0.0);
}

TEST_CASE("single loop costs two urn symbols and saves nothing") {
  const Graph g{1, false, {{0, 0}}};
  CHECK(edge_order_savings(g) == 0.0);
  CHECK(graph_nll(g, 1) == doctest::Approx(0.0));
  const Graph h{3, false, {{1, 1}}};
  // Two symbols under the urn: 1/3 then 2/4.
  CHECK(graph_nll(h, 1) == doctest::Approx(std::log2(3.0) + 1.0));
}

TEST_CASE("simple graphs save m + log2 m!") {
  const Graph g{6, false, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}};
  CHECK(edge_order_savings(g) == doctest::Approx(5.0 + oracle::log2z(oracle::factorial(5))));
  const Graph repeated{3, false, {{1, 2}, {1, 2}}};
  CHECK(edge_order_savings(repeated) == doctest::Approx(2.0));
  const Graph directed{3, true, {{1, 2}, {2, 1}}};
  CHECK(edge_order_savings(directed) == doctest::Approx(1.0));
}

TEST_CASE("triangle and repeated-edge rates") {
  for (const Graph& g : {Graph{3, false, {{0, 1}, {1, 2}, {0, 2}}},
                         Graph{3, false, {{1, 2}, {1, 2}}}, Graph{5, true, {{4, 0}, {4, 0}, {0, 4}}}}) {
    AnsState s = AnsState::seeded();
    rec_encode(s, g, 1);
    CHECK(std::abs(measured(s) - graph_nll(g, 1)) <= 2.0);
  }
}

TEST_CASE("stars are cheaper than paths under the urn") {
  const Graph star{6, false, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}};
  const Graph path{6, false, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}};
  CHECK(graph_nll(star, 1) < graph_nll(path, 1));
}

TEST_CASE("edge sampling probabilities multiply to prod c_e! / m!") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_multigraph(4, 1 + rng() % 40, trial % 2 == 0, rng);
    RecTrace trace;
    AnsState s = AnsState::seeded();
    rec_encode(s, g, 1, &trace);
    mpq_class path = 1;
    for (const auto& step : trace.edge_steps) path *= mpq_class(step.weight, step.total);
    path.canonicalize();
    std::vector<std::uint64_t> counts;
    for (auto& [e, c] : oracle::histogram(edge_sort(g).edges)) counts.push_back(c);
    CHECK(path == mpq_class(mpz_class(1), oracle::multinomial(counts)));
  }
}

TEST_CASE("decoder contexts mirror the encoder's") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const bool directed = trial % 2 == 0;
    const Graph g = random_multigraph(12, 1 + rng() % 60, directed, rng);
    RecTrace enc;
    RecTrace dec;
    enc.snapshot_counts = dec.snapshot_counts = true;
    AnsState s = AnsState::seeded();
    rec_encode(s, g, 2, &enc);
    rec_decode(s, 12, g.edge_count(), 2, directed, &dec);
    std::reverse(enc.vertex_steps.begin(), enc.vertex_steps.end());
    CHECK(enc.vertex_steps == dec.vertex_steps);
  }
}

TEST_CASE("uniform simple-graph baseline") {
  CHECK(er_graph_nll(3, 3) == 0.0);
  CHECK(er_graph_nll(4, 2) == doctest::Approx(std::log2(15.0)));
  CHECK(std::abs(er_graph_nll(100, 200) - er_graph_nll_lgamma(100, 200)) < 1e-6);
  CHECK_THROWS_AS(er_graph_nll(3, 4), InvalidArgument);
}

TEST_CASE("invalid vertices") {
  AnsState s = AnsState::seeded();
  CHECK_THROWS_AS(rec_encode(s, Graph{2, false, {{0, 2}}}, 1), InvalidArgument);
  CHECK_THROWS_AS(PolyaContext(0, 1), InvalidArgument);
  CHECK_THROWS_AS(PolyaContext(3, 0), InvalidArgument);
}
