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

#include "permucodec/message.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "permucodec/error.hpp"

namespace permucodec {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'R', 'P', 'C', 'Z'};

struct ModeInfo {
  Mode mode;
  std::string_view name;
  std::size_t params;
};

constexpr std::array<ModeInfo, 6> kModes{{
    {Mode::kMultiset, "multiset", 3},
    {Mode::kNested, "nested", 3},
    {Mode::kPartition, "partition", 2},
    {Mode::kGraphUndirected, "graph", 3},
    {Mode::kGraphDirected, "digraph", 3},
    {Mode::kLvm, "lvm", 1},
}};

const ModeInfo* find_mode(std::uint8_t raw) {
  for (const auto& m : kModes)
    if (static_cast<std::uint8_t>(m.mode) == raw) return &m;
  return nullptr;
}

}  // namespace

std::size_t param_count(Mode mode) {
  const ModeInfo* info = find_mode(static_cast<std::uint8_t>(mode));
  if (!info) throw InvalidArgument("unknown mode");
  return info->params;
}

Mode parse_mode(std::string_view name) {
  for (const auto& m : kModes)
    if (m.name == name) return m.mode;
  throw InvalidArgument("unknown mode '" + std::string(name) + "'");
}

std::string_view mode_name(Mode mode) {
  const ModeInfo* info = find_mode(static_cast<std::uint8_t>(mode));
  if (!info) throw InvalidArgument("unknown mode");
  return info->name;
}

void write_varint(std::vector<std::uint8_t>& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(value | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(value));
}

std::uint64_t read_varint(std::span<const std::uint8_t> in, std::size_t& pos) {
  std::uint64_t value = 0;
  for (unsigned shift = 0;; shift += 7) {
    if (pos >= in.size()) throw CorruptMessage("truncated varint");
    const std::uint8_t byte = in[pos++];
    const std::uint64_t bits = byte & 0x7f;
    if (shift == 63 && bits > 1) throw CorruptMessage("varint overflow");
    if (shift > 63) throw CorruptMessage("varint overflow");
    value |= bits << shift;
    if ((byte & 0x80) == 0) return value;
  }
}

std::vector<std::uint8_t> write_message(Mode mode, std::span<const std::uint64_t> params,
                                        const AnsState& state) {
  if (params.size() != param_count(mode)) throw InvalidArgument("wrong parameter count for mode");
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.push_back(kMessageVersion);
  out.push_back(static_cast<std::uint8_t>(mode));
  for (std::uint64_t p : params) write_varint(out, p);
  const std::vector<std::uint8_t> payload = state_serialize(state);
  write_varint(out, payload.size());
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Message read_message(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size() + 2) throw CorruptMessage("truncated header");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) throw CorruptMessage("bad magic");
  if (bytes[4] != kMessageVersion) throw CorruptMessage("unsupported version");
  const ModeInfo* info = find_mode(bytes[5]);
  if (!info) throw CorruptMessage("unknown mode");
  std::size_t pos = 6;
  std::vector<std::uint64_t> params;
  for (std::size_t i = 0; i < info->params; ++i) params.push_back(read_varint(bytes, pos));
  const std::uint64_t length = read_varint(bytes, pos);
  if (length != bytes.size() - pos) throw CorruptMessage("payload length mismatch");
  Message m{info->mode, std::move(params), state_deserialize(bytes.subspan(pos)), pos};
  return m;
}

}  // namespace permucodec
