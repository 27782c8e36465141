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

#include "permucodec/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

#include <json.hpp>

#include "permucodec/error.hpp"

namespace permucodec {

namespace {

using nlohmann::json;

/// Splits on '\n'; a final newline does not start another line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line);
  return value;
}

std::string strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return std::string(line);
}

}  // namespace

std::vector<std::string> parse_records(std::string_view text, std::uint64_t max_length) {
  std::vector<std::string> records;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() > max_length)
      throw ParseError("record longer than " + std::to_string(max_length) + " bytes", i + 1);
    records.emplace_back(lines[i]);
  }
  return records;
}

std::string format_records(std::vector<std::string> records) {
  std::sort(records.begin(), records.end());
  std::string out;
  for (const auto& r : records) {
    out += r;
    out += '\n';
  }
  return out;
}

std::vector<std::uint64_t> parse_uint_records(std::string_view text, std::uint64_t alphabet_size) {
  std::vector<std::uint64_t> values;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 1) throw ParseError("expected one integer per line", i + 1);
    const std::uint64_t v = parse_uint(fields[0], i + 1);
    if (v >= alphabet_size)
      throw ParseError("value outside [0, " + std::to_string(alphabet_size) + ")", i + 1);
    values.push_back(v);
  }
  return values;
}

std::string format_uint_records(std::vector<std::uint64_t> values) {
  std::sort(values.begin(), values.end());
  std::string out;
  for (std::uint64_t v : values) out += std::to_string(v) + '\n';
  return out;
}

NestedMultiset parse_nested(std::string_view text, std::uint64_t max_length) {
  NestedMultiset out;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (split_fields(lines[i]).empty()) continue;
    json object;
    try {
      object = json::parse(lines[i]);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), i + 1);
    }
    if (!object.is_object()) throw ParseError("expected a JSON object", i + 1);
    InnerMultiset<std::string> inner;
    for (const auto& [key, value] : object.items()) {
      std::string record = json::array({key, value}).dump();
      if (record.size() > max_length)
        throw ParseError("entry longer than " + std::to_string(max_length) + " bytes", i + 1);
      inner.push_back(std::move(record));
    }
    std::sort(inner.begin(), inner.end());
    out.add(inner);
  }
  return out;
}

std::string format_nested(const NestedMultiset& m) {
  std::vector<std::string> lines;
  for (const auto& [inner, count] : m.counts()) {
    json object = json::object();
    for (const auto& record : inner) {
      json pair;
      try {
        pair = json::parse(record);
      } catch (const json::exception&) {
        throw CorruptMessage("nested entry is not JSON");
      }
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          object.contains(pair[0].get<std::string>()))
        throw CorruptMessage("nested entry is not a key/value pair");
      object[pair[0].get<std::string>()] = pair[1];
    }
    lines.insert(lines.end(), count, object.dump());
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line + '\n';
  return out;
}

Partition<std::uint64_t> parse_partition(std::string_view text) {
  Partition<std::uint64_t> p;
  std::set<std::uint64_t> seen;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::vector<std::uint64_t> cluster;
    for (auto token : split_fields(lines[i])) {
      const std::uint64_t id = parse_uint(token, i + 1);
      if (!seen.insert(id).second)
        throw ParseError("element " + std::to_string(id) + " appears more than once", i + 1);
      cluster.push_back(id);
    }
    if (!cluster.empty()) p.push_back(std::move(cluster));
  }
  return p;
}

std::string format_partition(Partition<std::uint64_t> p) {
  for (auto& cluster : p) std::sort(cluster.begin(), cluster.end());
  std::sort(p.begin(), p.end());
  std::string out;
  for (const auto& cluster : p) {
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cluster[i]);
    }
    out += '\n';
  }
  return out;
}

LabeledGraph parse_graph(std::string_view text, bool directed, std::optional<std::uint64_t> nodes,
                         bool labeled) {
  std::vector<std::pair<std::string, std::string>> raw;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i]);
    if (fields.empty()) continue;
    if (fields.size() != 2) throw ParseError("expected 'u v'", i + 1);
    if (!labeled) {
      parse_uint(fields[0], i + 1);
      parse_uint(fields[1], i + 1);
    }
    raw.emplace_back(fields[0], fields[1]);
  }
  LabeledGraph out;
  out.graph.directed = directed;
  if (labeled) {
    std::map<std::string, std::uint64_t> ids;
    for (const auto& [u, w] : raw) {
      ids.emplace(u, 0);
      ids.emplace(w, 0);
    }
    for (auto& [label, id] : ids) {
      id = out.labels.size();
      out.labels.push_back(label);
    }
    for (const auto& [u, w] : raw) out.graph.edges.emplace_back(ids[u], ids[w]);
  } else {
    for (const auto& [u, w] : raw) out.graph.edges.emplace_back(parse_uint(u, 0), parse_uint(w, 0));
  }
  std::uint64_t inferred = out.labels.size();
  for (const auto& [u, w] : out.graph.edges) inferred = std::max({inferred, u + 1, w + 1});
  if (nodes && *nodes < inferred)
    throw ParseError("vertex id " + std::to_string(inferred - 1) + " not below --nodes " +
                         std::to_string(*nodes),
                     0);
  out.graph.n = nodes.value_or(inferred);
  return out;
}

std::string format_graph(const Graph& g, const std::vector<std::string>& labels) {
  const Graph sorted = edge_sort(g);
  auto name = [&](Vertex v) {
    if (labels.empty()) return std::to_string(v);
    if (v >= labels.size()) throw CorruptMessage("vertex without a label");
    return labels[v];
  };
  std::string out;
  for (const auto& [u, w] : sorted.edges) out += name(u) + ' ' + name(w) + '\n';
  return out;
}

std::vector<std::string> parse_labels(std::string_view text) {
  std::vector<std::string> labels;
  for (auto line : split_lines(text)) labels.push_back(strip_cr(line));
  return labels;
}

std::string format_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& label : labels) out += label + '\n';
  return out;
}

std::vector<std::uint64_t> parse_observations(std::string_view text, std::uint64_t alphabet_size) {
  std::vector<std::uint64_t> xs;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (auto token : split_fields(lines[i])) {
      const std::uint64_t x = parse_uint(token, i + 1);
      if (x >= alphabet_size)
        throw ParseError("observation outside [0, " + std::to_string(alphabet_size) + ")", i + 1);
      xs.push_back(x);
    }
  }
  return xs;
}

std::string format_observations(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (std::uint64_t x : xs) out += std::to_string(x) + '\n';
  return out;
}

}  // namespace permucodec
