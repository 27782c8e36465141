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

// Message framing.
//
//   "RPCZ" | version (1 byte) | mode (1 byte) | params (varints) |
//   payload length (varint) | payload (serialized ANS state)
//
// Varints are unsigned LEB128. The number of params is fixed per mode. The
// seed state is not transmitted: decoding must end at the seed, which doubles
// as an integrity check.

#ifndef PERMUCODEC_MESSAGE_HPP
#define PERMUCODEC_MESSAGE_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "permucodec/ans.hpp"

namespace permucodec {

enum class Mode : std::uint8_t {
  kMultiset = 1,
  kNested = 2,
  kPartition = 3,
  kGraphUndirected = 4,
  kGraphDirected = 5,
  kLvm = 6,
};

inline constexpr std::uint8_t kMessageVersion = 1;

/// Parameter counts: multiset (n, codec id, Lmax or K); nested (outer size,
/// max inner size, Lmax); partition (n, K); graph (n, m, beta); lvm (count).
std::size_t param_count(Mode mode);

/// Throws InvalidArgument for an unknown name.
Mode parse_mode(std::string_view name);
std::string_view mode_name(Mode mode);

inline constexpr std::uint64_t kCodecBytes = 1;
inline constexpr std::uint64_t kCodecUint = 2;

void write_varint(std::vector<std::uint8_t>& out, std::uint64_t value);

/// Reads one varint at `pos`, advancing it. Throws CorruptMessage on
/// truncation or a value that does not fit in 64 bits.
std::uint64_t read_varint(std::span<const std::uint8_t> in, std::size_t& pos);

struct Message {
  Mode mode;
  std::vector<std::uint64_t> params;
  AnsState state;
  std::size_t header_bytes = 0;  // filled by read_message
};

std::vector<std::uint8_t> write_message(Mode mode, std::span<const std::uint64_t> params,
                                        const AnsState& state);

/// Throws CorruptMessage on a bad magic, version, mode, truncation or
/// trailing bytes.
Message read_message(std::span<const std::uint8_t> bytes);

}  // namespace permucodec

#endif  // PERMUCODEC_MESSAGE_HPP
