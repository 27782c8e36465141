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

// Text formats for every mode, and their canonical writers.
//
//   multiset   one byte record per line ('\n' separated, final newline optional)
//   nested     one JSON object per line; each (key, value) pair is one record
//   partition  one cluster per line, whitespace-separated non-negative ids
//   graph      one "u v" edge per line
//   lvm        whitespace-separated observation ids
//
// Parse failures throw ParseError with the 1-based line number.

#ifndef PERMUCODEC_INGEST_HPP
#define PERMUCODEC_INGEST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permucodec/rcc.hpp"
#include "permucodec/rec.hpp"
#include "permucodec/roc.hpp"

namespace permucodec {

std::vector<std::string> parse_records(std::string_view text, std::uint64_t max_length);

/// Records sorted ascending, one per line.
std::string format_records(std::vector<std::string> records);

/// Lines holding integers in [0, alphabet_size).
std::vector<std::uint64_t> parse_uint_records(std::string_view text, std::uint64_t alphabet_size);
std::string format_uint_records(std::vector<std::uint64_t> values);

using NestedMultiset = Multiset<InnerMultiset<std::string>>;

/// Each record is the compact JSON array [key, value]. Blank lines are
/// skipped.
NestedMultiset parse_nested(std::string_view text, std::uint64_t max_length);

/// One JSON object per line with keys sorted, lines sorted. Throws
/// CorruptMessage if a record is not a [key, value] pair.
std::string format_nested(const NestedMultiset& m);

/// Blank lines are skipped. Repeated ids are a parse error.
Partition<std::uint64_t> parse_partition(std::string_view text);

/// Elements ascending within a cluster, clusters by minimum ascending.
std::string format_partition(Partition<std::uint64_t> p);

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;  // id -> label; empty for integer input
};

/// Integer vertices unless `labeled`, in which case tokens are arbitrary and
/// ids follow the sorted order of distinct labels. n defaults to the number of
/// labels, or the largest id plus one.
LabeledGraph parse_graph(std::string_view text, bool directed, std::optional<std::uint64_t> nodes,
                         bool labeled);

/// Edge-sorted "u v" lines, with labels substituted when given.
std::string format_graph(const Graph& g, const std::vector<std::string>& labels = {});

std::vector<std::string> parse_labels(std::string_view text);
std::string format_labels(const std::vector<std::string>& labels);

std::vector<std::uint64_t> parse_observations(std::string_view text, std::uint64_t alphabet_size);
std::string format_observations(const std::vector<std::uint64_t>& xs);

}  // namespace permucodec

#endif  // PERMUCODEC_INGEST_HPP
