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

// Idealized asymmetric numeral systems over an unbounded integer state.
//
// The whole compressed message is a single non-negative integer. Encoding a
// symbol whose range is [c, c + p) in a distribution of precision N maps the
// state s to
//
//     N * (s / p) + c + s % p
//
// and decoding inverts that map exactly. There is no renormalization: the
// state grows by roughly -log2(p / N) bits per symbol and decoding shrinks it
// by the same amount. Because decode is a bijection on the naturals it also
// serves as an invertible sampler, which the bits-back codecs rely on.
//
// ANS is a stack: symbols come back out in the reverse order they went in.

#ifndef PERMUCODEC_ANS_HPP
#define PERMUCODEC_ANS_HPP

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "permucodec/error.hpp"

namespace permucodec {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t),
              "GMP unsigned long must be 64 bits wide");

/// Seed exponent used by every codec in this library: s0 = 2^64.
inline constexpr unsigned kDefaultSeedBits = 64;

/// Frequency and cumulative frequency of one symbol: the range [start, start + freq).
struct Range {
  std::uint64_t freq = 0;
  std::uint64_t start = 0;

  friend bool operator==(const Range&, const Range&) = default;
};

/// Result of a reverse lookup: the symbol owning an index and its range.
template <typename Symbol>
struct RangeTriple {
  Symbol symbol;
  std::uint64_t freq = 0;
  std::uint64_t start = 0;

  Range range() const { return {freq, start}; }
  friend bool operator==(const RangeTriple&, const RangeTriple&) = default;
};

/// The ANS state.
///
/// `peek` and `pop` split a decode in two so the caller can look up the symbol
/// owning `s mod N` in whatever structure holds the distribution (a table, an
/// order-statistic tree, a Fenwick tree) before removing it from the state.
class AnsState {
 public:
  AnsState() = default;
  explicit AnsState(std::uint64_t value) : value_(static_cast<unsigned long>(value)) {}
  explicit AnsState(mpz_class value);

  /// State holding 2^bits.
  static AnsState seeded(unsigned bits = kDefaultSeedBits);

  const mpz_class& value() const noexcept { return value_; }

  /// Number of binary digits; 0 for the zero state.
  std::size_t bit_length() const noexcept;

  /// Encodes the range [r.start, r.start + r.freq) of a precision-N distribution.
  void push(Range r, std::uint64_t precision);

  /// Returns s mod N without changing the state.
  std::uint64_t peek(std::uint64_t precision) const;

  /// Removes the symbol whose range contains peek(N). The range must be the
  /// one owning that index.
  void pop(Range r, std::uint64_t precision);

  friend bool operator==(const AnsState& a, const AnsState& b) { return a.value_ == b.value_; }

 private:
  friend void bytes_encode(AnsState&, std::string_view, std::uint64_t);
  friend std::string bytes_decode(AnsState&, std::uint64_t);

  void invalidate() const noexcept { cached_precision_ = 0; }

  mpz_class value_;
  // Quotient and remainder of the last peek, reused by the following pop.
  mutable mpz_class quotient_;
  mutable std::uint64_t remainder_ = 0;
  mutable std::uint64_t cached_precision_ = 0;
};

/// Quantized probability distribution over an ordered alphabet.
///
/// Symbols are kept in ascending order, which fixes the cumulative
/// frequencies. Every weight is at least one and the weights sum to the
/// precision N < 2^64.
template <typename Symbol>
class QuantizedDist {
 public:
  QuantizedDist() = default;

  explicit QuantizedDist(std::vector<std::pair<Symbol, std::uint64_t>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    symbols_.reserve(entries.size());
    weights_.reserve(entries.size());
    cumulative_.reserve(entries.size() + 1);
    cumulative_.push_back(0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i > 0 && !(entries[i - 1].first < entries[i].first))
        throw InvalidArgument("duplicate symbol in distribution");
      if (entries[i].second == 0) throw InvalidArgument("distribution weights must be >= 1");
      if (entries[i].second > UINT64_MAX - cumulative_.back())
        throw InvalidArgument("distribution precision overflows 64 bits");
      symbols_.push_back(std::move(entries[i].first));
      weights_.push_back(entries[i].second);
      cumulative_.push_back(cumulative_.back() + entries[i].second);
    }
    if (symbols_.empty()) throw InvalidArgument("distribution must have at least one symbol");
  }

  /// Dense alphabet 0..weights.size()-1.
  static QuantizedDist dense(std::span<const std::uint64_t> weights)
    requires std::is_integral_v<Symbol>
  {
    std::vector<std::pair<Symbol, std::uint64_t>> entries;
    entries.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i)
      entries.emplace_back(static_cast<Symbol>(i), weights[i]);
    return QuantizedDist(std::move(entries));
  }

  std::uint64_t precision() const noexcept { return cumulative_.empty() ? 0 : cumulative_.back(); }
  std::size_t size() const noexcept { return symbols_.size(); }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::span<const std::uint64_t> weights() const noexcept { return weights_; }

  bool contains(const Symbol& x) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), x);
    return it != symbols_.end() && !(x < *it);
  }

  Range forward_lookup(const Symbol& x) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), x);
    if (it == symbols_.end() || x < *it) throw InvalidArgument("symbol not in alphabet");
    const auto i = static_cast<std::size_t>(it - symbols_.begin());
    return {weights_[i], cumulative_[i]};
  }

  RangeTriple<Symbol> reverse_lookup(std::uint64_t j) const {
    if (j >= precision()) throw InvalidArgument("index outside [0, N)");
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), j);
    const auto i = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    return {symbols_[i], weights_[i], cumulative_[i]};
  }

  double probability(const Symbol& x) const {
    return static_cast<double>(forward_lookup(x).freq) / static_cast<double>(precision());
  }

 private:
  std::vector<Symbol> symbols_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::uint64_t> cumulative_;
};

/// Value form of a single encode: N * (s / p) + c + s % p.
mpz_class ans_encode(const mpz_class& s, Range r, std::uint64_t precision);

template <typename Symbol>
void ans_encode(AnsState& s, const QuantizedDist<Symbol>& d, const Symbol& x) {
  s.push(d.forward_lookup(x), d.precision());
}

template <typename Symbol>
Symbol ans_decode(AnsState& s, const QuantizedDist<Symbol>& d) {
  const std::uint64_t j = s.peek(d.precision());
  RangeTriple<Symbol> t = d.reverse_lookup(j);
  s.pop(t.range(), d.precision());
  return std::move(t.symbol);
}

/// Encodes xs left to right with one i.i.d. distribution.
template <typename Symbol>
void encode_sequence(AnsState& s, std::span<const Symbol> xs, const QuantizedDist<Symbol>& d) {
  for (const Symbol& x : xs) ans_encode(s, d, x);
}

/// Encodes xs left to right, symbol i under dists[i].
template <typename Symbol>
void encode_sequence(AnsState& s, std::span<const Symbol> xs,
                     std::span<const QuantizedDist<Symbol>> dists) {
  if (xs.size() != dists.size()) throw InvalidArgument("one distribution per symbol required");
  for (std::size_t i = 0; i < xs.size(); ++i) ans_encode(s, dists[i], xs[i]);
}

/// Decodes `count` symbols; the result is in encode order.
template <typename Symbol>
std::vector<Symbol> decode_sequence(AnsState& s, std::size_t count, const QuantizedDist<Symbol>& d) {
  std::vector<Symbol> out(count);
  for (std::size_t i = count; i-- > 0;) out[i] = ans_decode(s, d);
  return out;
}

void uniform_encode(AnsState& s, std::uint64_t x, std::uint64_t alphabet_size);
std::uint64_t uniform_decode(AnsState& s, std::uint64_t alphabet_size);

/// Byte record codec: bytes r[L-1]..r[0] under uniform(256), then L under
/// uniform(max_length + 1).
void bytes_encode(AnsState& s, std::string_view record, std::uint64_t max_length);
std::string bytes_decode(AnsState& s, std::uint64_t max_length);

/// Minimal big-endian bytes; the zero state is the single byte 0x00.
std::vector<std::uint8_t> state_serialize(const AnsState& s);
AnsState state_deserialize(std::span<const std::uint8_t> bytes);

}  // namespace permucodec

#endif  // PERMUCODEC_ANS_HPP
