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

// Random cycle coding: partitions of distinct elements, with the cluster
// assignment carried by the order in which elements are encoded.
//
// The partition is put in canonical form: each cluster sorted ascending, the
// clusters sorted by their smallest element, largest first. Clusters are
// encoded last to first; each one draws its non-minimal elements without
// replacement (as a set) and then encodes its minimum. The decoder therefore
// sees each cluster's minimum first, followed by elements larger than it, and
// an element smaller than the current minimum opens the next cluster. No
// cluster sizes are transmitted; the draws save sum log2((n_i - 1)!) bits.

#ifndef PERMUCODEC_RCC_HPP
#define PERMUCODEC_RCC_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "permucodec/ans.hpp"
#include "permucodec/codec.hpp"
#include "permucodec/error.hpp"
#include "permucodec/roc.hpp"
#include "permucodec/swor_tree.hpp"

namespace permucodec {

template <typename Symbol>
using Partition = std::vector<std::vector<Symbol>>;

/// Sorts each cluster ascending and the clusters by minimum, descending.
/// Rejects empty clusters and elements that appear more than once.
template <typename Symbol>
Partition<Symbol> foata_canonicalize(Partition<Symbol> p) {
  std::size_t total = 0;
  for (auto& cluster : p) {
    if (cluster.empty()) throw InvalidArgument("partition has an empty cluster");
    std::sort(cluster.begin(), cluster.end());
    total += cluster.size();
  }
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return b.front() < a.front(); });
  std::vector<Symbol> all;
  all.reserve(total);
  for (const auto& cluster : p) all.insert(all.end(), cluster.begin(), cluster.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end(), [](const Symbol& a, const Symbol& b) {
        return !(a < b);
      }) != all.end())
    throw InvalidArgument("partition has a repeated element");
  return p;
}

template <typename Symbol>
std::uint64_t partition_size(const Partition<Symbol>& p) {
  std::uint64_t n = 0;
  for (const auto& cluster : p) n += cluster.size();
  return n;
}

template <typename Symbol>
std::vector<std::uint64_t> cluster_sizes(const Partition<Symbol>& p) {
  std::vector<std::uint64_t> out;
  out.reserve(p.size());
  for (const auto& cluster : p) out.push_back(cluster.size());
  return out;
}

template <SymbolCodec Codec>
void rcc_encode(AnsState& s, const Partition<typename Codec::symbol_type>& p, const Codec& codec,
                SamplingLog* log = nullptr) {
  using Symbol = typename Codec::symbol_type;
  const Partition<Symbol> canonical = foata_canonicalize(p);
  for (auto it = canonical.rbegin(); it != canonical.rend(); ++it) {
    auto rest = SworTree<Symbol>::build(std::span<const Symbol>(*it).subspan(1));
    roc_encode_tree(s, rest, codec, log);
    codec.encode(s, it->front());
  }
}

/// Returns the partition in canonical form.
template <SymbolCodec Codec>
Partition<typename Codec::symbol_type> rcc_decode(AnsState& s, std::uint64_t n, const Codec& codec) {
  using Symbol = typename Codec::symbol_type;
  Partition<Symbol> clusters;
  std::set<Symbol> seen;
  SworTree<Symbol> rest;
  auto close_cluster = [&] {
    if (clusters.empty()) return;
    for (auto& [x, c] : rest.items()) clusters.back().push_back(x);
    rest = SworTree<Symbol>();
  };
  for (std::uint64_t decoded = 0; decoded < n; ++decoded) {
    Symbol x = codec.decode(s);
    if (!seen.insert(x).second) throw CorruptMessage("repeated element in partition");
    if (clusters.empty() || x < clusters.back().front()) {
      close_cluster();
      clusters.push_back({x});
      continue;
    }
    rest.insert(x);
    s.push(rest.forward_lookup(x), rest.size());
  }
  close_cluster();
  return clusters;
}

/// log2 of the number of orderings sharing the cycle structure:
/// sum log2((n_i - 1)!). Evaluated with log-gamma.
double partition_order_info(std::span<const std::uint64_t> sizes);

/// Same quantity with exact integer factorials.
double partition_order_info_exact(std::span<const std::uint64_t> sizes);

/// log2 of the partition probability implied by the codec:
/// sum log2((n_i - 1)!) - log2(n!).
double implied_log_prob(std::span<const std::uint64_t> sizes);

/// Bit savings of three ways of coding a clustering of n = sum(sizes)
/// distinct elements relative to coding them as a sequence.
struct SchemeComparison {
  double rcc;   // sum log2((n_i - 1)!)
  double roc1;  // sizes sent under uniform(n - N_i), one multiset per cluster
  double roc2;  // roc1 plus a bits-back draw of the cluster order, minus log2 n for k
};

SchemeComparison compare_schemes(std::span<const std::uint64_t> sizes);

/// Cluster sizes maximizing the savings for n elements in k clusters: one of
/// size n - k + 1, the rest singletons.
std::vector<std::uint64_t> max_savings_sizes(std::uint64_t n, std::uint64_t k);

/// Cluster sizes minimizing the savings: (n / k) + [i < n % k].
std::vector<std::uint64_t> min_savings_sizes(std::uint64_t n, std::uint64_t k);

/// Order information in bytes per element for sqrt(n) clusters of sqrt(n)
/// elements each: sqrt(n) log2((sqrt(n) - 1)!) / (8 n), real-valued sizes.
double sqrt_clusters_bytes_per_element(double n);

}  // namespace permucodec

#endif  // PERMUCODEC_RCC_HPP
