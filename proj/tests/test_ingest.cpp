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
#include "permucodec/ingest.hpp"

using namespace permucodec;

TEST_CASE("byte records") {
  CHECK(parse_records("a\nb\nb\n", 10) == std::vector<std::string>{"a", "b", "b"});
  CHECK(parse_records("a\nb", 10) == std::vector<std::string>{"a", "b"});
  CHECK(parse_records("\n\n", 10) == std::vector<std::string>{"", ""});
  CHECK(parse_records("", 10).empty());
  CHECK(format_records({"b", "a", "b"}) == "a\nb\nb\n");
  try {
    parse_records("ok\ntoolong\n", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("integer records") {
  CHECK(parse_uint_records("3\n1\n", 4) == std::vector<std::uint64_t>{3, 1});
  CHECK_THROWS_AS(parse_uint_records("4\n", 4), ParseError);
  CHECK_THROWS_AS(parse_uint_records("-1\n", 4), ParseError);
  CHECK(format_uint_records({3, 1, 3}) == "1\n3\n3\n");
}

TEST_CASE("partitions") {
  const auto p = parse_partition("2 4 5\n\n1 3\n");
  CHECK(p == Partition<std::uint64_t>{{2, 4, 5}, {1, 3}});
  CHECK(format_partition(p) == "1 3\n2 4 5\n");
  try {
    parse_partition("1 2\n3 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_partition("1 x\n"), ParseError);
}

TEST_CASE("graphs") {
  const auto g = parse_graph("3 4\n1 2\n3 2\n", false, std::nullopt, false);
  CHECK(g.graph.n == 5);
  CHECK(format_graph(g.graph) == "1 2\n2 3\n3 4\n");
  const auto d = parse_graph("3 1\n1 3\n", true, 10, false);
  CHECK(d.graph.n == 10);
  CHECK(format_graph(d.graph) == "1 3\n3 1\n");
  CHECK_THROWS_AS(parse_graph("1 2 3\n", false, std::nullopt, false), ParseError);
  CHECK_THROWS_AS(parse_graph("1 9\n", false, 5, false), ParseError);

  const auto labeled = parse_graph("bob alice\ncarol bob\n", false, std::nullopt, true);
  CHECK(labeled.labels == std::vector<std::string>{"alice", "bob", "carol"});
  CHECK(labeled.graph.n == 3);
  CHECK(format_graph(labeled.graph, labeled.labels) == "alice bob\nbob carol\n");
  CHECK(parse_labels(format_labels(labeled.labels)) == labeled.labels);
}

TEST_CASE("nested maps") {
  const auto m = parse_nested("{\"b\": 1, \"a\": [1, 2]}\n{}\n\n{\"a\": [1,2], \"b\": 1}\n", 1000);
  CHECK(m.size() == 3);
  CHECK(m.distinct() == 2);
  CHECK(format_nested(m) == "{\"a\":[1,2],\"b\":1}\n{\"a\":[1,2],\"b\":1}\n{}\n");
  CHECK_THROWS_AS(parse_nested("[1, 2]\n", 1000), ParseError);
  CHECK_THROWS_AS(parse_nested("{bad\n", 1000), ParseError);
  NestedMultiset junk;
  junk.add(InnerMultiset<std::string>{"not json"});
  CHECK_THROWS_AS(format_nested(junk), CorruptMessage);
}

TEST_CASE("observations") {
  CHECK(parse_observations("0 1\n1\n", 2) == std::vector<std::uint64_t>{0, 1, 1});
  CHECK_THROWS_AS(parse_observations("2\n", 2), ParseError);
  CHECK(format_observations({1, 0}) == "1\n0\n");
}
