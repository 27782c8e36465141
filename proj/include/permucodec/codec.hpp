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

#ifndef PERMUCODEC_CODEC_HPP
#define PERMUCODEC_CODEC_HPP

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

#include "permucodec/ans.hpp"

namespace permucodec {

/// A bijective pair of state transforms for one symbol type:
/// decode(encode(s, x)) returns x and restores s.
///
/// The order-invariant codecs (multisets, partitions) are only optimal when the
/// codec treats symbols exchangeably, e.g. i.i.d. This cannot be checked here.
template <typename C>
concept SymbolCodec = requires(const C& codec, AnsState& s, const typename C::symbol_type& x) {
  typename C::symbol_type;
  codec.encode(s, x);
  { codec.decode(s) } -> std::same_as<typename C::symbol_type>;
};

/// Integers in [0, K) with equal probability.
class UniformCodec {
 public:
  using symbol_type = std::uint64_t;

  explicit UniformCodec(std::uint64_t alphabet_size) : alphabet_size_(alphabet_size) {
    if (alphabet_size == 0) throw InvalidArgument("alphabet size must be >= 1");
  }

  std::uint64_t alphabet_size() const noexcept { return alphabet_size_; }
  void encode(AnsState& s, std::uint64_t x) const { uniform_encode(s, x, alphabet_size_); }
  std::uint64_t decode(AnsState& s) const { return uniform_decode(s, alphabet_size_); }

 private:
  std::uint64_t alphabet_size_;
};

/// i.i.d. symbols under a fixed quantized distribution.
template <typename Symbol>
class DistCodec {
 public:
  using symbol_type = Symbol;

  explicit DistCodec(QuantizedDist<Symbol> dist) : dist_(std::move(dist)) {}

  const QuantizedDist<Symbol>& dist() const noexcept { return dist_; }
  void encode(AnsState& s, const Symbol& x) const { ans_encode(s, dist_, x); }
  Symbol decode(AnsState& s) const { return ans_decode(s, dist_); }

 private:
  QuantizedDist<Symbol> dist_;
};

/// Byte records of length at most `max_length`, every byte uniform.
class BytesCodec {
 public:
  using symbol_type = std::string;

  explicit BytesCodec(std::uint64_t max_length = 65535) : max_length_(max_length) {}

  std::uint64_t max_length() const noexcept { return max_length_; }
  void encode(AnsState& s, const std::string& x) const { bytes_encode(s, x, max_length_); }
  std::string decode(AnsState& s) const { return bytes_decode(s, max_length_); }

  /// Information content of one record in bits: 8 L + log2(max_length + 1).
  double cost(const std::string& x) const {
    return 8.0 * static_cast<double>(x.size()) +
           std::log2(static_cast<double>(max_length_) + 1.0);
  }

 private:
  std::uint64_t max_length_;
};

}  // namespace permucodec

#endif  // PERMUCODEC_CODEC_HPP
