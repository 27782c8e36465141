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

// Random edge coding: labeled graphs as edge multisets.
//
// Edges are drawn without replacement from the edge multiset, and for
// undirected non-loop edges an extra bit picks which endpoint is written
// first. The vertex sequence is modeled by a Polya urn, whose weight for
// vertex v is (occurrences of v so far) + beta. The urn is exchangeable, so
// every ordering the draws can produce has the same cost and the draws
// recover m~ + log2(m! / prod c_e!) bits, with m~ the undirected non-loop
// edge count and c_e the edge multiplicities.

#ifndef PERMUCODEC_REC_HPP
#define PERMUCODEC_REC_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "permucodec/ans.hpp"
#include "permucodec/roc.hpp"

namespace permucodec {

using Vertex = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Vertices are 0..n-1. Directed edges are (source, destination). Loops and
/// repeated edges are allowed.
struct Graph {
  std::uint64_t n = 0;
  bool directed = false;
  std::vector<Edge> edges;

  std::uint64_t edge_count() const noexcept { return edges.size(); }
  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Throws InvalidArgument if an endpoint is outside [0, n).
void validate(const Graph& g);

/// Undirected: endpoints ascending within each edge. Then edges sorted
/// lexicographically.
Graph edge_sort(Graph g);

/// Polya urn state: per-vertex occurrence counts in a Fenwick tree, so both
/// lookups cost O(log n).
class PolyaContext {
 public:
  PolyaContext(std::uint64_t n, std::uint64_t beta);

  std::uint64_t n() const noexcept { return n_; }
  std::uint64_t beta() const noexcept { return beta_; }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t count(Vertex v) const;
  std::vector<std::uint64_t> counts() const;

  void increment(Vertex v);
  void decrement(Vertex v);

  /// r + n beta.
  std::uint64_t precision() const noexcept { return total_ + n_ * beta_; }

  /// {count(v) + beta, sum_{w < v} count(w) + beta v}.
  Range range(Vertex v) const;

  /// The vertex whose range contains j, 0 <= j < precision().
  Vertex reverse_lookup(std::uint64_t j) const;

 private:
  std::uint64_t prefix(std::uint64_t k) const;  // sum of counts of vertices < k

  std::uint64_t n_;
  std::uint64_t beta_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> fenwick_;
  std::uint64_t top_bit_ = 0;
};

void polya_encode_vertex(AnsState& s, Vertex v, const PolyaContext& ctx);
Vertex polya_decode_vertex(AnsState& s, const PolyaContext& ctx);

/// One vertex coding step as seen by either side.
struct VertexStep {
  Vertex vertex;
  Range range;
  std::uint64_t precision;
  std::vector<std::uint64_t> counts;  // only filled when snapshots are on

  friend bool operator==(const VertexStep&, const VertexStep&) = default;
};

/// Optional instrumentation of rec_encode / rec_decode. Steps are recorded in
/// execution order, so the decoder's list is the encoder's reversed.
struct RecTrace {
  bool snapshot_counts = false;
  SamplingLog edge_steps;
  std::vector<VertexStep> vertex_steps;
};

void rec_encode(AnsState& s, const Graph& g, std::uint64_t beta = 1, RecTrace* trace = nullptr);

/// Returns the edge-sorted graph.
Graph rec_decode(AnsState& s, std::uint64_t n, std::uint64_t m, std::uint64_t beta, bool directed,
                 RecTrace* trace = nullptr);

/// -log2 of the urn probability of a vertex sequence over [0, n).
double polya_sequence_nll(std::uint64_t n, std::span<const Vertex> sequence, std::uint64_t beta = 1);

/// Same, from occurrence counts: -log2(prod beta^(d_v) / (n beta)^(sum d)),
/// with x^(k) the rising factorial.
double polya_degrees_nll(std::uint64_t n, std::span<const std::uint64_t> degrees,
                         std::uint64_t beta = 1);

/// The vertex sequence (u1, w1, u2, w2, ...) of the edge list.
std::vector<Vertex> vertex_sequence(const Graph& g);

/// m~ + log2(m! / prod c_e!); m~ is 0 for directed graphs.
double edge_order_savings(const Graph& g);

/// Information content of the graph under the urn model.
double graph_nll(const Graph& g, std::uint64_t beta = 1);

/// log2 C(C(n, 2), m): uniform simple undirected graphs with m edges.
double er_graph_nll(std::uint64_t n, std::uint64_t m);

/// Same value through log-gamma.
double er_graph_nll_lgamma(std::uint64_t n, std::uint64_t m);

}  // namespace permucodec

#endif  // PERMUCODEC_REC_HPP
