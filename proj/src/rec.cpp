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

#include "permucodec/rec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "permucodec/bits.hpp"
#include "permucodec/error.hpp"
#include "permucodec/swor_tree.hpp"

namespace permucodec {

void validate(const Graph& g) {
  for (const auto& [u, w] : g.edges)
    if (u >= g.n || w >= g.n) throw InvalidArgument("edge endpoint outside [0, n)");
}

Graph edge_sort(Graph g) {
  if (!g.directed)
    for (auto& [u, w] : g.edges)
      if (w < u) std::swap(u, w);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

PolyaContext::PolyaContext(std::uint64_t n, std::uint64_t beta)
    : n_(n), beta_(beta), counts_(n, 0), fenwick_(n + 1, 0) {
  if (n == 0) throw InvalidArgument("urn needs at least one vertex");
  if (beta == 0) throw InvalidArgument("beta must be >= 1");
  if (n > std::numeric_limits<std::uint64_t>::max() / 2 / beta)
    throw InvalidArgument("n * beta too large");
  top_bit_ = std::bit_floor(n);
}

std::uint64_t PolyaContext::count(Vertex v) const {
  if (v >= n_) throw InvalidArgument("vertex outside [0, n)");
  return counts_[v];
}

std::vector<std::uint64_t> PolyaContext::counts() const { return counts_; }

void PolyaContext::increment(Vertex v) {
  if (v >= n_) throw InvalidArgument("vertex outside [0, n)");
  if (precision() == std::numeric_limits<std::uint64_t>::max())
    throw InvalidArgument("urn precision overflow");
  ++counts_[v];
  ++total_;
  for (std::uint64_t i = v + 1; i <= n_; i += i & (~i + 1)) ++fenwick_[i];
}

void PolyaContext::decrement(Vertex v) {
  if (count(v) == 0) throw InvalidArgument("vertex count already zero");
  --counts_[v];
  --total_;
  for (std::uint64_t i = v + 1; i <= n_; i += i & (~i + 1)) --fenwick_[i];
}

std::uint64_t PolyaContext::prefix(std::uint64_t k) const {
  std::uint64_t sum = 0;
  for (std::uint64_t i = k; i > 0; i &= i - 1) sum += fenwick_[i];
  return sum;
}

Range PolyaContext::range(Vertex v) const {
  return {count(v) + beta_, prefix(v) + beta_ * v};
}

Vertex PolyaContext::reverse_lookup(std::uint64_t j) const {
  if (j >= precision()) throw InvalidArgument("index outside [0, precision)");
  // Largest k with prefix(k) + beta k <= j; every vertex has weight >= beta,
  // so the left-hand side is strictly increasing in k.
  std::uint64_t pos = 0;
  std::uint64_t below = 0;
  for (std::uint64_t step = top_bit_; step > 0; step >>= 1) {
    const std::uint64_t next = pos + step;
    if (next <= n_ && below + fenwick_[next] + beta_ * next <= j) {
      pos = next;
      below += fenwick_[next];
    }
  }
  return pos;
}

void polya_encode_vertex(AnsState& s, Vertex v, const PolyaContext& ctx) {
  s.push(ctx.range(v), ctx.precision());
}

Vertex polya_decode_vertex(AnsState& s, const PolyaContext& ctx) {
  const std::uint64_t precision = ctx.precision();
  const Vertex v = ctx.reverse_lookup(s.peek(precision));
  s.pop(ctx.range(v), precision);
  return v;
}

namespace {

void record(RecTrace* trace, Vertex v, const PolyaContext& ctx) {
  if (!trace) return;
  VertexStep step{v, ctx.range(v), ctx.precision(), {}};
  if (trace->snapshot_counts) step.counts = ctx.counts();
  trace->vertex_steps.push_back(std::move(step));
}

}  // namespace

void rec_encode(AnsState& s, const Graph& g, std::uint64_t beta, RecTrace* trace) {
  validate(g);
  if (g.edges.empty()) return;
  const Graph sorted = edge_sort(g);
  auto edges = SworTree<Edge>::build(sorted.edges);
  PolyaContext ctx(g.n, beta);
  for (const auto& [u, w] : sorted.edges) {
    ctx.increment(u);
    ctx.increment(w);
  }
  auto encode_vertex = [&](Vertex x) {
    ctx.decrement(x);
    record(trace, x, ctx);
    polya_encode_vertex(s, x, ctx);
  };
  while (!edges.empty()) {
    const std::uint64_t total = edges.size();
    const auto drawn = edges.reverse_lookup(s.peek(total));
    s.pop(drawn.range(), total);
    edges.remove(drawn.symbol);
    if (trace) trace->edge_steps.push_back({drawn.freq, total});
    const auto [u, w] = drawn.symbol;
    if (g.directed) {
      encode_vertex(w);
      encode_vertex(u);
    } else {
      const std::uint64_t b = u == w ? 0 : uniform_decode(s, 2);
      encode_vertex(b == 0 ? u : w);
      encode_vertex(b == 0 ? w : u);
    }
  }
}

Graph rec_decode(AnsState& s, std::uint64_t n, std::uint64_t m, std::uint64_t beta, bool directed,
                 RecTrace* trace) {
  Graph g{n, directed, {}};
  if (m == 0) return g;
  PolyaContext ctx(n, beta);
  SworTree<Edge> edges;
  auto decode_vertex = [&] {
    const Vertex x = polya_decode_vertex(s, ctx);
    record(trace, x, ctx);
    ctx.increment(x);
    return x;
  };
  for (std::uint64_t i = 0; i < m; ++i) {
    const Vertex first = decode_vertex();
    const Vertex second = decode_vertex();
    Edge e{first, second};
    if (!directed && first != second) {
      if (second < first) std::swap(e.first, e.second);
      uniform_encode(s, second == e.first ? 0 : 1, 2);
    }
    edges.insert(e);
    const Range r = edges.forward_lookup(e);
    s.push(r, edges.size());
    if (trace) trace->edge_steps.push_back({r.freq, edges.size()});
  }
  g.edges.reserve(m);
  for (const auto& [e, c] : edges.items()) g.edges.insert(g.edges.end(), c, e);
  return g;
}

double polya_degrees_nll(std::uint64_t n, std::span<const std::uint64_t> degrees,
                         std::uint64_t beta) {
  if (n == 0 || beta == 0) throw InvalidArgument("need n >= 1 and beta >= 1");
  if (degrees.size() > n) throw InvalidArgument("more degrees than vertices");
  std::uint64_t length = 0;
  std::vector<mpz_class> numerator;
  for (std::uint64_t d : degrees) {
    length += d;
    if (d > 0) numerator.push_back(rising_factorial(beta, d));
  }
  if (length == 0) return 0.0;
  const mpz_class denominator = rising_factorial(n * beta, length);
  return log2_of(denominator) - (numerator.empty() ? 0.0 : log2_of(product(numerator)));
}

double polya_sequence_nll(std::uint64_t n, std::span<const Vertex> sequence, std::uint64_t beta) {
  std::vector<std::uint64_t> degrees(n, 0);
  for (Vertex v : sequence) {
    if (v >= n) throw InvalidArgument("vertex outside [0, n)");
    ++degrees[v];
  }
  return polya_degrees_nll(n, degrees, beta);
}

std::vector<Vertex> vertex_sequence(const Graph& g) {
  std::vector<Vertex> out;
  out.reserve(2 * g.edges.size());
  for (const auto& [u, w] : g.edges) {
    out.push_back(u);
    out.push_back(w);
  }
  return out;
}

double edge_order_savings(const Graph& g) {
  const Graph sorted = edge_sort(g);
  std::vector<std::uint64_t> multiplicities;
  std::uint64_t non_loops = 0;
  for (std::size_t i = 0; i < sorted.edges.size(); ++i) {
    if (i > 0 && sorted.edges[i] == sorted.edges[i - 1])
      ++multiplicities.back();
    else
      multiplicities.push_back(1);
    if (sorted.edges[i].first != sorted.edges[i].second) ++non_loops;
  }
  const double orientation = g.directed ? 0.0 : static_cast<double>(non_loops);
  return orientation + log2_multinomial(multiplicities);
}

double graph_nll(const Graph& g, std::uint64_t beta) {
  validate(g);
  if (g.edges.empty()) return 0.0;
  return polya_sequence_nll(g.n, vertex_sequence(g), beta) - edge_order_savings(g);
}

namespace {

mpz_class vertex_pairs(std::uint64_t n) {
  mpz_class pairs = n;
  pairs *= n > 0 ? n - 1 : 0;
  pairs /= 2;
  return pairs;
}

}  // namespace

double er_graph_nll(std::uint64_t n, std::uint64_t m) {
  const mpz_class pairs = vertex_pairs(n);
  if (mpz_class(m) > pairs) throw InvalidArgument("more edges than vertex pairs");
  mpz_class binomial;
  mpz_bin_ui(binomial.get_mpz_t(), pairs.get_mpz_t(), m);
  return log2_of(binomial);
}

double er_graph_nll_lgamma(std::uint64_t n, std::uint64_t m) {
  const mpz_class pairs = vertex_pairs(n);
  if (mpz_class(m) > pairs) throw InvalidArgument("more edges than vertex pairs");
  const double p = pairs.get_d();
  const double k = static_cast<double>(m);
  return log2_factorial(p) - log2_factorial(k) - log2_factorial(p - k);
}

}  // namespace permucodec
