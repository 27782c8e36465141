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

#include "permucodec/error.hpp"
#include "permucodec/message.hpp"

using namespace permucodec;

TEST_CASE("varints") {
  for (std::uint64_t v : std::vector<std::uint64_t>{0, 1, 127, 128, 300, 1ULL << 40, UINT64_MAX}) {
    std::vector<std::uint8_t> out;
    write_varint(out, v);
    std::size_t pos = 0;
    CHECK(read_varint(out, pos) == v);
    CHECK(pos == out.size());
  }
  std::vector<std::uint8_t> three;
  write_varint(three, 300);
  CHECK(three == std::vector<std::uint8_t>{0xAC, 0x02});
  std::size_t pos = 0;
  CHECK_THROWS_AS(read_varint(std::vector<std::uint8_t>{0x80}, pos), CorruptMessage);
  pos = 0;
  const std::vector<std::uint8_t> too_long(11, 0xFF);
  CHECK_THROWS_AS(read_varint(too_long, pos), CorruptMessage);
}

TEST_CASE("message round trip") {
  const AnsState s(1291);
  const std::vector<std::uint64_t> params = {5, 7, 1};
  const auto bytes = write_message(Mode::kGraphUndirected, params, s);
  CHECK(bytes[0] == 'R');
  CHECK(bytes[3] == 'Z');
  CHECK(bytes[4] == 1);
  CHECK(bytes[5] == 4);
  const Message m = read_message(bytes);
  CHECK(m.mode == Mode::kGraphUndirected);
  CHECK(m.params == params);
  CHECK(m.state == s);
  CHECK(m.header_bytes == bytes.size() - 2);
}

TEST_CASE("malformed messages") {
  const auto good = write_message(Mode::kLvm, std::vector<std::uint64_t>{3}, AnsState(99));
  auto bad_magic = good;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(read_message(bad_magic), CorruptMessage);
  auto bad_version = good;
  bad_version[4] = 2;
  CHECK_THROWS_AS(read_message(bad_version), CorruptMessage);
  auto bad_mode = good;
  bad_mode[5] = 9;
  CHECK_THROWS_AS(read_message(bad_mode), CorruptMessage);
  auto truncated = good;
  truncated.pop_back();
  CHECK_THROWS_AS(read_message(truncated), CorruptMessage);
  auto trailing = good;
  trailing.push_back(0);
  CHECK_THROWS_AS(read_message(trailing), CorruptMessage);
  CHECK_THROWS_AS(write_message(Mode::kLvm, std::vector<std::uint64_t>{1, 2}, AnsState(1)),
                  InvalidArgument);
}

TEST_CASE("mode names") {
  CHECK(parse_mode("partition") == Mode::kPartition);
  CHECK(mode_name(Mode::kGraphDirected) == "digraph");
  CHECK_THROWS_AS(parse_mode("tree"), InvalidArgument);
  CHECK(param_count(Mode::kMultiset) == 3);
  CHECK(param_count(Mode::kPartition) == 2);
}
