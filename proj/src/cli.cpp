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

#include "permucodec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permucodec/ans.hpp"
#include "permucodec/bbans.hpp"
#include "permucodec/codec.hpp"
#include "permucodec/error.hpp"
#include "permucodec/ingest.hpp"
#include "permucodec/message.hpp"
#include "permucodec/rcc.hpp"
#include "permucodec/rec.hpp"
#include "permucodec/roc.hpp"

namespace permucodec {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Accounting for the edge count, which the message frames in the header.
constexpr double kEdgeCountBits = 32.0;

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string mode;
  bool directed = false;
  std::uint64_t beta = 1;
  std::uint64_t lmax = 65535;
  std::optional<std::uint64_t> alphabet;
  std::optional<std::uint64_t> nodes;
  unsigned seed_bits = kDefaultSeedBits;
  std::string labels;
  std::string model;
  std::string sizes;
};

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_file(const std::string& path, std::string_view data, std::ostream& out) {
  if (path == "-") {
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!f) throw UsageError("cannot write " + path);
}

Mode resolve_mode(const Options& opt) {
  const Mode mode = parse_mode(opt.mode);
  if (mode == Mode::kGraphUndirected && opt.directed) return Mode::kGraphDirected;
  return mode;
}

std::string fixed(double x, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::uint64_t partition_alphabet(const Partition<std::uint64_t>& p, const Options& opt) {
  std::uint64_t largest = 0;
  for (const auto& cluster : p)
    for (std::uint64_t x : cluster) largest = std::max(largest, x + 1);
  if (opt.alphabet) {
    if (*opt.alphabet < largest) throw ParseError("element not below --alphabet", 0);
    return *opt.alphabet;
  }
  return std::max<std::uint64_t>(largest, 1);
}

std::uint64_t max_inner_size(const NestedMultiset& m) {
  std::uint64_t largest = 0;
  for (const auto& [inner, c] : m.counts()) largest = std::max<std::uint64_t>(largest, inner.size());
  return largest;
}

DiscreteLvm require_model(const Options& opt) {
  if (opt.model.empty()) throw UsageError("lvm mode needs --model");
  std::istringstream in(read_file(opt.model));
  return parse_lvm(in);
}

LabeledGraph read_graph(const std::string& text, const Options& opt, Mode mode) {
  return parse_graph(text, mode == Mode::kGraphDirected, opt.nodes, !opt.labels.empty());
}

int cmd_encode(const Options& opt, std::ostream& out) {
  const Mode mode = resolve_mode(opt);
  const std::string text = read_file(opt.input);
  AnsState s = AnsState::seeded(opt.seed_bits);
  std::vector<std::uint64_t> params;
  switch (mode) {
    case Mode::kMultiset: {
      if (opt.alphabet) {
        const auto values = parse_uint_records(text, *opt.alphabet);
        roc_encode(s, Multiset<std::uint64_t>::from_items(values), UniformCodec(*opt.alphabet));
        params = {values.size(), kCodecUint, *opt.alphabet};
      } else {
        const auto records = parse_records(text, opt.lmax);
        roc_encode(s, Multiset<std::string>::from_items(records), BytesCodec(opt.lmax));
        params = {records.size(), kCodecBytes, opt.lmax};
      }
      break;
    }
    case Mode::kNested: {
      const NestedMultiset m = parse_nested(text, opt.lmax);
      const std::uint64_t bound = max_inner_size(m);
      nested_encode(s, m, BytesCodec(opt.lmax), bound);
      params = {m.size(), bound, opt.lmax};
      break;
    }
    case Mode::kPartition: {
      const auto p = parse_partition(text);
      const std::uint64_t k = partition_alphabet(p, opt);
      rcc_encode(s, p, UniformCodec(k));
      params = {partition_size(p), k};
      break;
    }
    case Mode::kGraphUndirected:
    case Mode::kGraphDirected: {
      const LabeledGraph lg = read_graph(text, opt, mode);
      rec_encode(s, lg.graph, opt.beta);
      params = {lg.graph.n, lg.graph.edge_count(), opt.beta};
      if (!opt.labels.empty()) write_file(opt.labels, format_labels(lg.labels), out);
      break;
    }
    case Mode::kLvm: {
      const DiscreteLvm lvm = require_model(opt);
      const auto xs = parse_observations(text, lvm.observation_count());
      bbans_encode(s, xs, lvm);
      params = {xs.size()};
      break;
    }
  }
  const std::vector<std::uint8_t> message = write_message(mode, params, s);
  const std::size_t payload_bytes = state_serialize(s).size();
  write_file(opt.output,
             std::string_view(reinterpret_cast<const char*>(message.data()), message.size()), out);
  if (opt.output == "-") return kExitOk;
  const double payload_bits =
      static_cast<double>(s.bit_length()) - static_cast<double>(opt.seed_bits + 1);
  out << "mode: " << mode_name(mode) << '\n'
      << "total_bits: " << 8 * message.size() << '\n'
      << "payload_bits: " << fixed(payload_bits, 0) << '\n'
      << "header_bits: " << 8 * (message.size() - payload_bytes) << '\n';
  if (mode == Mode::kGraphUndirected || mode == Mode::kGraphDirected)
    out << "payload_bits_with_edge_count: " << fixed(payload_bits + kEdgeCountBits, 0) << '\n';
  return kExitOk;
}

int cmd_decode(const Options& opt, std::ostream& out) {
  const std::string raw = read_file(opt.input);
  const std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(raw.data()),
                                            raw.size());
  Message msg = read_message(bytes);
  AnsState& s = msg.state;
  const auto& p = msg.params;
  // Formatting is deferred until the state has been checked, so corrupt
  // content reports as an integrity failure first.
  std::function<std::string()> render;
  switch (msg.mode) {
    case Mode::kMultiset: {
      if (p[1] == kCodecBytes) {
        auto m = roc_decode(s, p[0], BytesCodec(p[2]));
        render = [m] { return format_records(m.sorted_items()); };
      } else if (p[1] == kCodecUint) {
        if (p[2] == 0) throw CorruptMessage("empty alphabet");
        auto m = roc_decode(s, p[0], UniformCodec(p[2]));
        render = [m] { return format_uint_records(m.sorted_items()); };
      } else {
        throw CorruptMessage("unknown symbol codec");
      }
      break;
    }
    case Mode::kNested: {
      if (p[1] == UINT64_MAX) throw CorruptMessage("inner size bound too large");
      auto m = nested_decode(s, {p[0], p[1]}, BytesCodec(p[2]));
      render = [m] { return format_nested(m); };
      break;
    }
    case Mode::kPartition: {
      if (p[1] == 0 || p[0] > p[1]) throw CorruptMessage("partition larger than its alphabet");
      auto partition = rcc_decode(s, p[0], UniformCodec(p[1]));
      render = [partition] { return format_partition(partition); };
      break;
    }
    case Mode::kGraphUndirected:
    case Mode::kGraphDirected: {
      if (p[1] > 0 && p[0] == 0) throw CorruptMessage("edges without vertices");
      if (p[2] == 0) throw CorruptMessage("beta must be >= 1");
      const Graph g = rec_decode(s, p[0], p[1], p[2], msg.mode == Mode::kGraphDirected);
      std::vector<std::string> labels;
      if (!opt.labels.empty()) labels = parse_labels(read_file(opt.labels));
      render = [g, labels] { return format_graph(g, labels); };
      break;
    }
    case Mode::kLvm: {
      const DiscreteLvm lvm = require_model(opt);
      auto xs = bbans_decode(s, p[0], lvm);
      render = [xs] { return format_observations(xs); };
      break;
    }
  }
  if (s != AnsState::seeded(opt.seed_bits)) throw IntegrityFailure();
  write_file(opt.output, render(), out);
  return kExitOk;
}

std::vector<std::uint64_t> parse_sizes(const std::string& text) {
  std::vector<std::uint64_t> sizes;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto x = item.find('x');
    try {
      if (x == std::string::npos) {
        sizes.push_back(std::stoull(item));
      } else {
        const std::uint64_t count = std::stoull(item.substr(0, x));
        sizes.insert(sizes.end(), count, std::stoull(item.substr(x + 1)));
      }
    } catch (const std::exception&) {
      throw ParseError("bad --sizes item '" + item + "'", 0);
    }
  }
  if (sizes.empty()) throw ParseError("--sizes is empty", 0);
  return sizes;
}

void report_partition(std::span<const std::uint64_t> sizes, std::ostream& out) {
  std::uint64_t n = 0;
  for (std::uint64_t size : sizes) n += size;
  const double bits = partition_order_info(sizes);
  const auto schemes = compare_schemes(sizes);
  const auto hi = max_savings_sizes(n, sizes.size());
  const auto lo = min_savings_sizes(n, sizes.size());
  out << "elements: " << n << '\n'
      << "clusters: " << sizes.size() << '\n'
      << "order_information_bits: " << fixed(bits) << '\n'
      << "order_information: " << fixed(bits / (8.0 * static_cast<double>(n)), 2)
      << " bytes/element\n"
      << "savings_bits RCC: " << fixed(schemes.rcc) << '\n'
      << "savings_bits ROC-1: " << fixed(schemes.roc1) << '\n'
      << "savings_bits ROC-2: " << fixed(schemes.roc2) << '\n'
      << "max_savings_bits: " << fixed(partition_order_info(hi)) << '\n'
      << "min_savings_bits: " << fixed(partition_order_info(lo)) << '\n';
}

int cmd_info(const Options& opt, std::ostream& out) {
  const Mode mode = resolve_mode(opt);
  if (mode == Mode::kPartition && !opt.sizes.empty()) {
    report_partition(parse_sizes(opt.sizes), out);
    return kExitOk;
  }
  const std::string text = read_file(opt.input);
  switch (mode) {
    case Mode::kMultiset: {
      double sequence_bits = 0;
      double order_bits = 0;
      std::uint64_t n = 0;
      std::size_t distinct = 0;
      if (opt.alphabet) {
        const auto m = Multiset<std::uint64_t>::from_items(parse_uint_records(text, *opt.alphabet));
        n = m.size();
        distinct = m.distinct();
        sequence_bits = static_cast<double>(n) * std::log2(static_cast<double>(*opt.alphabet));
        order_bits = multiset_order_information(m);
      } else {
        const BytesCodec codec(opt.lmax);
        const auto records = parse_records(text, opt.lmax);
        for (const auto& r : records) sequence_bits += codec.cost(r);
        const auto m = Multiset<std::string>::from_items(records);
        n = m.size();
        distinct = m.distinct();
        order_bits = multiset_order_information(m);
      }
      out << "elements: " << n << '\n'
          << "distinct: " << distinct << '\n'
          << "sequence_bits: " << fixed(sequence_bits) << '\n'
          << "order_information_bits: " << fixed(order_bits) << '\n'
          << "information_content_bits: " << fixed(sequence_bits - order_bits) << '\n';
      if (n > 0)
        out << "bits_per_element: " << fixed((sequence_bits - order_bits) / static_cast<double>(n))
            << '\n';
      return kExitOk;
    }
    case Mode::kNested: {
      const NestedMultiset m = parse_nested(text, opt.lmax);
      const BytesCodec codec(opt.lmax);
      const double size_bits = std::log2(static_cast<double>(max_inner_size(m)) + 1.0);
      double sequence_bits = 0;
      for (const auto& [inner, c] : m.counts()) {
        double inner_bits = size_bits;
        for (const auto& r : inner) inner_bits += codec.cost(r);
        sequence_bits += static_cast<double>(c) * inner_bits;
      }
      const double order_bits = nested_order_information(m);
      out << "maps: " << m.size() << '\n'
          << "sequence_bits: " << fixed(sequence_bits) << '\n'
          << "order_information_bits: " << fixed(order_bits) << '\n'
          << "information_content_bits: " << fixed(sequence_bits - order_bits) << '\n';
      return kExitOk;
    }
    case Mode::kPartition: {
      const auto p = parse_partition(text);
      if (p.empty()) throw ParseError("empty partition", 0);
      report_partition(cluster_sizes(p), out);
      return kExitOk;
    }
    case Mode::kGraphUndirected:
    case Mode::kGraphDirected: {
      const Graph g = read_graph(text, opt, mode).graph;
      validate(g);
      const std::uint64_t m = g.edge_count();
      const double nll = graph_nll(g, opt.beta);
      const double savings = edge_order_savings(g);
      out << "nodes: " << g.n << '\n'
          << "edges: " << m << '\n'
          << "sequence_nll_bits: " << fixed(nll + savings) << '\n'
          << "edge_order_savings_bits: " << fixed(savings) << '\n'
          << "information_content_bits: " << fixed(nll) << '\n'
          << "with_edge_count_bits: " << fixed(nll + kEdgeCountBits) << '\n';
      if (m > 0)
        out << "bits_per_edge: " << fixed(nll / static_cast<double>(m)) << '\n';
      const Graph sorted = edge_sort(g);
      const bool simple =
          mode == Mode::kGraphUndirected &&
          std::adjacent_find(sorted.edges.begin(), sorted.edges.end()) == sorted.edges.end() &&
          std::none_of(sorted.edges.begin(), sorted.edges.end(),
                       [](const Edge& e) { return e.first == e.second; });
      if (simple && g.n >= 2 &&
          static_cast<double>(m) <= static_cast<double>(g.n) * static_cast<double>(g.n - 1) / 2)
        out << "erdos_renyi_baseline_bits: " << fixed(er_graph_nll(g.n, m)) << '\n';
      return kExitOk;
    }
    case Mode::kLvm: {
      const DiscreteLvm lvm = require_model(opt);
      const auto xs = parse_observations(text, lvm.observation_count());
      if (xs.empty()) throw ParseError("no observations", 0);
      std::map<std::uint64_t, std::uint64_t> counts;
      for (std::uint64_t x : xs) ++counts[x];
      const QuantizedDist<std::uint64_t> data(
          std::vector<std::pair<std::uint64_t, std::uint64_t>>(counts.begin(), counts.end()));
      const double rate = nelbo(lvm, data);
      out << "observations: " << xs.size() << '\n'
          << "nelbo_bits_per_symbol: " << fixed(rate, 4) << '\n'
          << "cross_entropy_bits_per_symbol: " << fixed(marginal_cross_entropy(lvm, data), 4)
          << '\n'
          << "expected_bits: " << fixed(rate * static_cast<double>(xs.size())) << '\n';
      return kExitOk;
    }
  }
  return kExitOk;
}

void add_input_options(CLI::App* cmd, Options& opt, bool needs_mode) {
  auto* mode = cmd->add_option("--mode", opt.mode,
                               "multiset | nested | partition | graph | digraph | lvm")
                   ->check(CLI::IsMember({"multiset", "nested", "partition", "graph", "digraph",
                                          "lvm"}));
  if (needs_mode) mode->required();
  cmd->add_flag("--directed", opt.directed, "Treat graph edges as (source, destination)");
  cmd->add_option("--beta", opt.beta, "Polya urn concentration (positive integer)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--lmax", opt.lmax, "Maximum byte-record length");
  cmd->add_option("--alphabet", opt.alphabet,
                  "Integer alphabet size: multiset records become integers, partition ids bound");
  cmd->add_option("--nodes", opt.nodes, "Vertex count (default: largest id + 1)");
  cmd->add_option("--labels", opt.labels, "Vertex label sidecar file");
  cmd->add_option("--model", opt.model, "Latent-variable model file for lvm mode");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Order-invariant compression of multisets, partitions and graphs", "permucodec");
  app.require_subcommand(1);
  Options opt;

  auto* encode = app.add_subcommand("encode", "Compress a file into a message");
  encode->add_option("input", opt.input, "Input file ('-' for stdin)")->required();
  encode->add_option("-o,--output", opt.output, "Message file")->required();
  add_input_options(encode, opt, true);
  encode->add_option("--seed-bits", opt.seed_bits, "Seed state exponent")
      ->check(CLI::Range(1u, 4096u));

  auto* decode = app.add_subcommand("decode", "Reconstruct the canonical object from a message");
  decode->add_option("input", opt.input, "Message file")->required();
  decode->add_option("-o,--output", opt.output, "Output file (default stdout)");
  decode->add_option("--labels", opt.labels, "Vertex label sidecar file");
  decode->add_option("--model", opt.model, "Latent-variable model file for lvm messages");
  decode->add_option("--seed-bits", opt.seed_bits, "Seed state exponent")
      ->check(CLI::Range(1u, 4096u));

  auto* info = app.add_subcommand("info", "Report information content and savings");
  info->add_option("input", opt.input, "Input file");
  add_input_options(info, opt, true);
  info->add_option("--sizes", opt.sizes, "Partition cluster sizes, e.g. 3,1 or 1000x1000");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const bool decoding = decode->parsed();
  try {
    if (encode->parsed()) return cmd_encode(opt, out);
    if (decoding) return cmd_decode(opt, out);
    return cmd_info(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CorruptMessage& e) {
    err << "error: " << e.what() << '\n';
    return kExitCorrupt;
  } catch (const IntegrityFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitCorrupt;
  } catch (const StateDepleted& e) {
    err << "error: " << e.what() << '\n';
    return kExitCorrupt;
  } catch (const Error& e) {
    err << "error: " << (decoding ? "corrupt message: " : "") << e.what() << '\n';
    return decoding ? kExitCorrupt : kExitParse;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return decoding ? kExitCorrupt : kExitUsage;
  }
}

}  // namespace permucodec
