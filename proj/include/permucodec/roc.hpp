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

// Random order coding: multisets compressed to their information content.
//
// The encoder repeatedly draws an element without replacement from the
// remaining multiset by decoding with the distribution multiplicity / size,
// then encodes the drawn element with the symbol codec. The decoder pops the
// elements back in reverse and re-encodes each sampling choice, which returns
// the state to its seed. The draws remove log2(n! / prod M(x)!) bits, exactly
// the information in the ordering the sequence codec would otherwise pay for.

#ifndef PERMUCODEC_ROC_HPP
#define PERMUCODEC_ROC_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "permucodec/ans.hpp"
#include "permucodec/bits.hpp"
#include "permucodec/codec.hpp"
#include "permucodec/swor_tree.hpp"

namespace permucodec {

template <typename Symbol>
class Multiset {
 public:
  Multiset() = default;

  static Multiset from_items(const std::vector<Symbol>& items) {
    Multiset m;
    for (const Symbol& x : items) m.add(x);
    return m;
  }

  void add(const Symbol& x, std::uint64_t count = 1) {
    if (count == 0) return;
    counts_[x] += count;
    size_ += count;
  }

  std::uint64_t size() const noexcept { return size_; }
  std::size_t distinct() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return size_ == 0; }

  std::uint64_t count(const Symbol& x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
  }

  const std::map<Symbol, std::uint64_t>& counts() const noexcept { return counts_; }

  std::vector<std::uint64_t> multiplicities() const {
    std::vector<std::uint64_t> out;
    out.reserve(counts_.size());
    for (const auto& [x, c] : counts_) out.push_back(c);
    return out;
  }

  /// Elements in ascending order, repeats adjacent.
  std::vector<Symbol> sorted_items() const {
    std::vector<Symbol> out;
    out.reserve(size_);
    for (const auto& [x, c] : counts_) out.insert(out.end(), c, x);
    return out;
  }

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.counts_ == b.counts_; }

 private:
  std::map<Symbol, std::uint64_t> counts_;
  std::uint64_t size_ = 0;
};

/// One bits-back draw: an element of multiplicity `weight` out of `total`.
struct SamplingStep {
  std::uint64_t weight;
  std::uint64_t total;
};

using SamplingLog = std::vector<SamplingStep>;

/// Draws every element of `tree` without replacement and encodes it; leaves
/// the tree empty.
template <SymbolCodec Codec, typename Compare>
void roc_encode_tree(AnsState& s, SworTree<typename Codec::symbol_type, Compare>& tree,
                     const Codec& codec, SamplingLog* log = nullptr) {
  while (!tree.empty()) {
    const std::uint64_t total = tree.size();
    auto drawn = tree.reverse_lookup(s.peek(total));
    s.pop(drawn.range(), total);
    tree.remove(drawn.symbol);
    codec.encode(s, drawn.symbol);
    if (log) log->push_back({drawn.freq, total});
  }
}

/// Decodes `n` elements into `tree`, re-encoding each draw.
template <SymbolCodec Codec, typename Compare>
void roc_decode_tree(AnsState& s, std::uint64_t n,
                     SworTree<typename Codec::symbol_type, Compare>& tree, const Codec& codec) {
  for (std::uint64_t i = 0; i < n; ++i) {
    auto x = codec.decode(s);
    tree.insert(x);
    s.push(tree.forward_lookup(x), tree.size());
  }
}

template <SymbolCodec Codec>
void roc_encode(AnsState& s, const Multiset<typename Codec::symbol_type>& m, const Codec& codec,
                SamplingLog* log = nullptr) {
  using Symbol = typename Codec::symbol_type;
  std::vector<std::pair<Symbol, std::uint64_t>> runs(m.counts().begin(), m.counts().end());
  auto tree = SworTree<Symbol>::build_counts(std::move(runs));
  roc_encode_tree(s, tree, codec, log);
}

template <SymbolCodec Codec>
Multiset<typename Codec::symbol_type> roc_decode(AnsState& s, std::uint64_t n, const Codec& codec) {
  using Symbol = typename Codec::symbol_type;
  SworTree<Symbol> tree;
  roc_decode_tree(s, n, tree, codec);
  Multiset<Symbol> out;
  for (auto& [x, c] : tree.items()) out.add(x, c);
  return out;
}

/// log2(n! / prod M(x)!): the bits spent on ordering a multiset as a sequence.
template <typename Symbol>
double multiset_order_information(const Multiset<Symbol>& m) {
  return log2_multinomial(m.multiplicities());
}

/// Information content of a multiset given the cost in bits of any one of its
/// orderings under an exchangeable sequence model.
template <typename Symbol>
double multiset_info_content(const Multiset<Symbol>& m, double sequence_bits) {
  return sequence_bits - multiset_order_information(m);
}

// Nested multisets ----------------------------------------------------------
//
// An outer multiset whose elements are themselves multisets. Inner multisets
// are represented by their ascending element lists, which also gives the
// total order used by the outer tree (lexicographic). Each inner multiset is
// followed in the message by its size under uniform(max_inner_size + 1), so the
// decoder knows how many elements to pull before closing it.

template <typename Symbol>
using InnerMultiset = std::vector<Symbol>;

struct NestedShape {
  std::uint64_t outer_size = 0;
  std::uint64_t max_inner_size = 0;
};

template <SymbolCodec Codec>
void nested_encode(AnsState& s, const Multiset<InnerMultiset<typename Codec::symbol_type>>& outer,
                   const Codec& codec, std::uint64_t max_inner_size) {
  using Symbol = typename Codec::symbol_type;
  if (max_inner_size == UINT64_MAX) throw InvalidArgument("inner size bound too large");
  std::vector<std::pair<InnerMultiset<Symbol>, std::uint64_t>> runs;
  for (const auto& [inner, c] : outer.counts()) {
    if (!std::is_sorted(inner.begin(), inner.end()))
      throw InvalidArgument("inner multisets must be sorted ascending");
    if (inner.size() > max_inner_size) throw InvalidArgument("inner multiset exceeds size bound");
    runs.emplace_back(inner, c);
  }
  auto tree = SworTree<InnerMultiset<Symbol>>::build_counts(std::move(runs));
  while (!tree.empty()) {
    const std::uint64_t total = tree.size();
    auto drawn = tree.reverse_lookup(s.peek(total));
    s.pop(drawn.range(), total);
    tree.remove(drawn.symbol);
    auto inner = SworTree<Symbol>::build(drawn.symbol);
    roc_encode_tree(s, inner, codec);
    uniform_encode(s, drawn.symbol.size(), max_inner_size + 1);
  }
}

template <SymbolCodec Codec>
Multiset<InnerMultiset<typename Codec::symbol_type>> nested_decode(AnsState& s, NestedShape shape,
                                                                   const Codec& codec) {
  using Symbol = typename Codec::symbol_type;
  if (shape.max_inner_size == UINT64_MAX) throw InvalidArgument("inner size bound too large");
  SworTree<InnerMultiset<Symbol>> tree;
  for (std::uint64_t i = 0; i < shape.outer_size; ++i) {
    const std::uint64_t size = uniform_decode(s, shape.max_inner_size + 1);
    SworTree<Symbol> inner;
    roc_decode_tree(s, size, inner, codec);
    InnerMultiset<Symbol> items;
    items.reserve(size);
    for (auto& [x, c] : inner.items()) items.insert(items.end(), c, x);
    tree.insert(items);
    s.push(tree.forward_lookup(items), tree.size());
  }
  Multiset<InnerMultiset<Symbol>> out;
  for (auto& [inner, c] : tree.items()) out.add(inner, c);
  return out;
}

/// Bits removed by nesting: log2 of the outer multinomial plus every inner
/// one. With all inner multisets distinct and all their elements distinct this
/// is log2|M|! + sum log2|J_i|!.
template <typename Symbol>
double nested_order_information(const Multiset<InnerMultiset<Symbol>>& outer) {
  double bits = log2_multinomial(outer.multiplicities());
  for (const auto& [inner, c] : outer.counts()) {
    const double inner_bits = multiset_order_information(Multiset<Symbol>::from_items(inner));
    bits += static_cast<double>(c) * inner_bits;
  }
  return bits;
}

}  // namespace permucodec

#endif  // PERMUCODEC_ROC_HPP
