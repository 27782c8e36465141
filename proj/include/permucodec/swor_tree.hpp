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

// Order-statistic multiset tree used for sampling without replacement.
//
// Each node holds one distinct symbol, its multiplicity, and the total count
// of its subtree. Viewing the multiset as the quantized distribution
// P(x) = multiplicity(x) / size, the tree answers forward lookups (symbol to
// range) and reverse lookups (index to symbol and range) in time proportional
// to its height. The tree is an AVL tree over the distinct symbols, so the
// height stays within 1.44 log2(m + 2) for m distinct symbols regardless of
// the order of insertions and removals.

#ifndef PERMUCODEC_SWOR_TREE_HPP
#define PERMUCODEC_SWOR_TREE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "permucodec/ans.hpp"
#include "permucodec/error.hpp"

namespace permucodec {

template <typename Symbol, typename Compare = std::less<Symbol>>
class SworTree {
 public:
  explicit SworTree(Compare cmp = Compare()) : cmp_(std::move(cmp)) {}

  /// Balanced tree over an ascending sequence; repeats become multiplicities.
  static SworTree build(std::span<const Symbol> sorted, Compare cmp = Compare()) {
    std::vector<std::pair<Symbol, std::uint64_t>> runs;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0 && cmp(sorted[i], sorted[i - 1])) throw InvalidArgument("build input is not sorted");
      if (!runs.empty() && !cmp(runs.back().first, sorted[i]))
        ++runs.back().second;
      else
        runs.emplace_back(sorted[i], 1);
    }
    return build_counts(std::move(runs), std::move(cmp));
  }

  /// Balanced tree over strictly ascending (symbol, multiplicity) runs.
  static SworTree build_counts(std::vector<std::pair<Symbol, std::uint64_t>> runs,
                               Compare cmp = Compare()) {
    SworTree t(std::move(cmp));
    for (std::size_t i = 0; i < runs.size(); ++i) {
      if (runs[i].second == 0) throw InvalidArgument("multiplicity must be >= 1");
      if (i > 0 && !t.cmp_(runs[i - 1].first, runs[i].first))
        throw InvalidArgument("build input is not sorted");
    }
    t.nodes_.reserve(runs.size());
    t.root_ = t.build_range(runs, 0, runs.size());
    return t;
  }

  std::uint64_t size() const noexcept { return count(root_); }
  bool empty() const noexcept { return root_ == kNil; }
  std::size_t distinct() const noexcept { return nodes_.size() - free_.size(); }
  int height() const noexcept { return height_of(root_); }

  std::uint64_t multiplicity(const Symbol& x) const {
    const Index t = find(x);
    return t == kNil ? 0 : nodes_[t].multiplicity;
  }

  void insert(const Symbol& x) { root_ = insert_at(root_, x); }

  void remove(const Symbol& x) {
    if (find(x) == kNil) throw InvalidArgument("remove of a symbol not in the tree");
    root_ = remove_at(root_, x);
  }

  /// (multiplicity of x, number of elements strictly smaller than x).
  Range forward_lookup(const Symbol& x) const {
    std::uint64_t below = 0;
    Index t = root_;
    while (t != kNil) {
      ++visits_;
      const Node& n = nodes_[t];
      if (cmp_(x, n.symbol)) {
        t = n.left;
      } else if (cmp_(n.symbol, x)) {
        below += count(n.left) + n.multiplicity;
        t = n.right;
      } else {
        return {n.multiplicity, below + count(n.left)};
      }
    }
    throw InvalidArgument("symbol not in the tree");
  }

  /// The symbol whose range [c, c + p) contains j, for 0 <= j < size().
  RangeTriple<Symbol> reverse_lookup(std::uint64_t j) const {
    if (j >= size()) throw InvalidArgument("index outside [0, size)");
    std::uint64_t below = 0;
    Index t = root_;
    for (;;) {
      ++visits_;
      const Node& n = nodes_[t];
      const std::uint64_t left = count(n.left);
      if (j < left) {
        t = n.left;
      } else if (j - left < n.multiplicity) {
        return {n.symbol, n.multiplicity, below + left};
      } else {
        j -= left + n.multiplicity;
        below += left + n.multiplicity;
        t = n.right;
      }
    }
  }

  /// In-order (symbol, multiplicity) pairs.
  std::vector<std::pair<Symbol, std::uint64_t>> items() const {
    std::vector<std::pair<Symbol, std::uint64_t>> out;
    out.reserve(distinct());
    collect(root_, out);
    return out;
  }

  /// Nodes touched by lookups since construction or the last reset.
  std::uint64_t node_visits() const noexcept { return visits_; }
  void reset_node_visits() noexcept { visits_ = 0; }

  /// Checks the subtree-count, ordering and balance invariants.
  bool check_invariants() const { return check(root_, nullptr, nullptr).ok; }

 private:
  using Index = std::int32_t;
  static constexpr Index kNil = -1;

  struct Node {
    Symbol symbol;
    std::uint64_t multiplicity;
    std::uint64_t count;
    Index left;
    Index right;
    int height;
  };

  std::uint64_t count(Index t) const noexcept { return t == kNil ? 0 : nodes_[t].count; }
  int height_of(Index t) const noexcept { return t == kNil ? 0 : nodes_[t].height; }

  void update(Index t) {
    Node& n = nodes_[t];
    n.count = n.multiplicity + count(n.left) + count(n.right);
    n.height = 1 + std::max(height_of(n.left), height_of(n.right));
  }

  Index make_node(const Symbol& x, std::uint64_t multiplicity) {
    Node n{x, multiplicity, multiplicity, kNil, kNil, 1};
    if (!free_.empty()) {
      const Index t = free_.back();
      free_.pop_back();
      nodes_[t] = std::move(n);
      return t;
    }
    nodes_.push_back(std::move(n));
    return static_cast<Index>(nodes_.size() - 1);
  }

  Index build_range(std::vector<std::pair<Symbol, std::uint64_t>>& runs, std::size_t lo,
                    std::size_t hi) {
    if (lo >= hi) return kNil;
    const std::size_t mid = lo + (hi - lo) / 2;
    const Index left = build_range(runs, lo, mid);
    const Index t = make_node(runs[mid].first, runs[mid].second);
    const Index right = build_range(runs, mid + 1, hi);
    nodes_[t].left = left;
    nodes_[t].right = right;
    update(t);
    return t;
  }

  Index find(const Symbol& x) const {
    Index t = root_;
    while (t != kNil) {
      ++visits_;
      const Node& n = nodes_[t];
      if (cmp_(x, n.symbol))
        t = n.left;
      else if (cmp_(n.symbol, x))
        t = n.right;
      else
        return t;
    }
    return kNil;
  }

  Index rotate_right(Index t) {
    const Index l = nodes_[t].left;
    nodes_[t].left = nodes_[l].right;
    nodes_[l].right = t;
    update(t);
    update(l);
    return l;
  }

  Index rotate_left(Index t) {
    const Index r = nodes_[t].right;
    nodes_[t].right = nodes_[r].left;
    nodes_[r].left = t;
    update(t);
    update(r);
    return r;
  }

  Index rebalance(Index t) {
    update(t);
    const int balance = height_of(nodes_[t].left) - height_of(nodes_[t].right);
    if (balance > 1) {
      const Index l = nodes_[t].left;
      if (height_of(nodes_[l].left) < height_of(nodes_[l].right)) nodes_[t].left = rotate_left(l);
      return rotate_right(t);
    }
    if (balance < -1) {
      const Index r = nodes_[t].right;
      if (height_of(nodes_[r].right) < height_of(nodes_[r].left)) nodes_[t].right = rotate_right(r);
      return rotate_left(t);
    }
    return t;
  }

  Index insert_at(Index t, const Symbol& x) {
    if (t == kNil) return make_node(x, 1);
    ++visits_;
    if (cmp_(x, nodes_[t].symbol)) {
      const Index l = insert_at(nodes_[t].left, x);
      nodes_[t].left = l;
    } else if (cmp_(nodes_[t].symbol, x)) {
      const Index r = insert_at(nodes_[t].right, x);
      nodes_[t].right = r;
    } else {
      ++nodes_[t].multiplicity;
      ++nodes_[t].count;
      return t;
    }
    return rebalance(t);
  }

  // Detaches the minimum node of the subtree rooted at t; returns the new root.
  Index detach_min(Index t, Index& min_node) {
    ++visits_;
    if (nodes_[t].left == kNil) {
      min_node = t;
      return nodes_[t].right;
    }
    const Index l = detach_min(nodes_[t].left, min_node);
    nodes_[t].left = l;
    return rebalance(t);
  }

  Index remove_at(Index t, const Symbol& x) {
    ++visits_;
    Node& n = nodes_[t];
    if (cmp_(x, n.symbol)) {
      const Index l = remove_at(n.left, x);
      nodes_[t].left = l;
      return rebalance(t);
    }
    if (cmp_(n.symbol, x)) {
      const Index r = remove_at(n.right, x);
      nodes_[t].right = r;
      return rebalance(t);
    }
    if (n.multiplicity > 1) {
      --n.multiplicity;
      --n.count;
      return t;
    }
    const Index left = n.left;
    const Index right = n.right;
    free_.push_back(t);
    if (left == kNil) return right;
    if (right == kNil) return left;
    Index successor = kNil;
    const Index new_right = detach_min(right, successor);
    nodes_[successor].left = left;
    nodes_[successor].right = new_right;
    return rebalance(successor);
  }

  void collect(Index t, std::vector<std::pair<Symbol, std::uint64_t>>& out) const {
    if (t == kNil) return;
    collect(nodes_[t].left, out);
    out.emplace_back(nodes_[t].symbol, nodes_[t].multiplicity);
    collect(nodes_[t].right, out);
  }

  struct CheckResult {
    bool ok;
    int height;
    std::uint64_t count;
  };

  CheckResult check(Index t, const Symbol* lo, const Symbol* hi) const {
    if (t == kNil) return {true, 0, 0};
    const Node& n = nodes_[t];
    if (n.multiplicity == 0) return {false, 0, 0};
    if (lo && !cmp_(*lo, n.symbol)) return {false, 0, 0};
    if (hi && !cmp_(n.symbol, *hi)) return {false, 0, 0};
    const CheckResult l = check(n.left, lo, &n.symbol);
    const CheckResult r = check(n.right, &n.symbol, hi);
    const int h = 1 + std::max(l.height, r.height);
    const bool ok = l.ok && r.ok && std::abs(l.height - r.height) <= 1 && h == n.height &&
                    n.count == n.multiplicity + l.count + r.count;
    return {ok, h, n.count};
  }

  Compare cmp_;
  std::vector<Node> nodes_;
  std::vector<Index> free_;
  Index root_ = kNil;
  mutable std::uint64_t visits_ = 0;
};

}  // namespace permucodec

#endif  // PERMUCODEC_SWOR_TREE_HPP
