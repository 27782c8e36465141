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

#include "permucodec/bbans.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "permucodec/error.hpp"

namespace permucodec {

namespace {

bool dense_over(const QuantizedDist<std::uint64_t>& d, std::uint64_t size) {
  if (d.size() != size) return false;
  for (std::uint64_t i = 0; i < size; ++i)
    if (d.symbols()[i] != i) return false;
  return true;
}

}  // namespace

DiscreteLvm::DiscreteLvm(QuantizedDist<std::uint64_t> prior,
                         std::vector<QuantizedDist<std::uint64_t>> conditional,
                         std::vector<QuantizedDist<std::uint64_t>> posterior)
    : prior_(std::move(prior)), conditional_(std::move(conditional)), posterior_(std::move(posterior)) {
  const std::uint64_t z_size = prior_.size();
  if (z_size == 0 || !dense_over(prior_, z_size)) throw InvalidArgument("prior must cover 0..|Z|-1");
  if (conditional_.size() != z_size) throw InvalidArgument("need one conditional per latent");
  if (posterior_.empty()) throw InvalidArgument("need at least one observation");
  const std::uint64_t x_size = posterior_.size();
  for (const auto& c : conditional_) {
    if (!dense_over(c, x_size)) throw InvalidArgument("conditionals must cover 0..|X|-1");
    if (c.precision() != conditional_.front().precision())
      throw InvalidArgument("conditionals must share one precision");
  }
  for (const auto& q : posterior_) {
    if (!dense_over(q, z_size)) throw InvalidArgument("posteriors must cover 0..|Z|-1");
    if (q.precision() != prior_.precision())
      throw InvalidArgument("posterior and prior precisions differ");
  }
}

DiscreteLvm DiscreteLvm::from_weights(std::span<const std::uint64_t> prior,
                                      const std::vector<std::vector<std::uint64_t>>& conditional,
                                      const std::vector<std::vector<std::uint64_t>>& posterior) {
  std::vector<QuantizedDist<std::uint64_t>> c;
  std::vector<QuantizedDist<std::uint64_t>> q;
  for (const auto& row : conditional) c.push_back(QuantizedDist<std::uint64_t>::dense(row));
  for (const auto& row : posterior) q.push_back(QuantizedDist<std::uint64_t>::dense(row));
  return DiscreteLvm(QuantizedDist<std::uint64_t>::dense(prior), std::move(c), std::move(q));
}

const QuantizedDist<std::uint64_t>& DiscreteLvm::conditional(std::uint64_t z) const {
  if (z >= conditional_.size()) throw InvalidArgument("latent out of range");
  return conditional_[z];
}

const QuantizedDist<std::uint64_t>& DiscreteLvm::posterior(std::uint64_t x) const {
  if (x >= posterior_.size()) throw InvalidArgument("observation out of range");
  return posterior_[x];
}

DiscreteLvm parse_lvm(std::istream& in) {
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<std::uint64_t> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      std::uint64_t value = 0;
      try {
        if (token.front() == '-') throw std::invalid_argument(token);
        value = std::stoull(token, &used);
      } catch (const std::exception&) {
        throw ParseError("expected a non-negative integer, got '" + token + "'", line_no);
      }
      if (used != token.size()) throw ParseError("expected an integer, got '" + token + "'", line_no);
      row.push_back(value);
    }
    rows.emplace_back(line_no, std::move(row));
  }
  if (rows.empty()) throw ParseError("empty model file", line_no);
  if (rows[0].second.size() != 2) throw ParseError("header must be 'N_Z N_X'", rows[0].first);
  const std::uint64_t nz = rows[0].second[0];
  const std::uint64_t nx = rows[0].second[1];
  if (rows.size() < 3) throw ParseError("missing prior or conditional rows", line_no);
  const std::size_t z_size = rows[1].second.size();
  const std::size_t x_size = rows[2].second.size();
  if (rows.size() != 2 + z_size + x_size)
    throw ParseError("expected " + std::to_string(2 + z_size + x_size) + " rows after comments",
                     rows.back().first);
  auto checked = [&](std::size_t i, std::size_t width, std::uint64_t precision) {
    const auto& [at, row] = rows[i];
    if (row.size() != width) throw ParseError("row has the wrong number of weights", at);
    std::uint64_t sum = 0;
    for (std::uint64_t w : row) {
      if (w == 0) throw ParseError("weights must be >= 1", at);
      if (w > precision - sum) throw ParseError("row does not sum to its precision", at);
      sum += w;
    }
    if (sum != precision) throw ParseError("row does not sum to its precision", at);
    return row;
  };
  const auto prior = checked(1, z_size, nz);
  std::vector<std::vector<std::uint64_t>> conditional;
  for (std::size_t z = 0; z < z_size; ++z) conditional.push_back(checked(2 + z, x_size, nx));
  std::vector<std::vector<std::uint64_t>> posterior;
  for (std::size_t x = 0; x < x_size; ++x) posterior.push_back(checked(2 + z_size + x, z_size, nz));
  return DiscreteLvm::from_weights(prior, conditional, posterior);
}

DiscreteLvm load_lvm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open model file " + path);
  return parse_lvm(in);
}

void bbans_encode(AnsState& s, std::span<const std::uint64_t> xs, const DiscreteLvm& lvm,
                  std::vector<std::uint64_t>* latents) {
  const mpz_class guard(lvm.latent_precision());
  for (std::uint64_t x : xs) {
    const auto& posterior = lvm.posterior(x);
    if (s.value() < guard) throw StateDepleted();
    const std::uint64_t z = ans_decode(s, posterior);
    ans_encode(s, lvm.conditional(z), x);
    ans_encode(s, lvm.prior(), z);
    if (latents) latents->push_back(z);
  }
}

std::vector<std::uint64_t> bbans_decode(AnsState& s, std::size_t count, const DiscreteLvm& lvm) {
  std::vector<std::uint64_t> xs(count);
  for (std::size_t i = count; i-- > 0;) {
    const std::uint64_t z = ans_decode(s, lvm.prior());
    const std::uint64_t x = ans_decode(s, lvm.conditional(z));
    ans_encode(s, lvm.posterior(x), z);
    xs[i] = x;
  }
  return xs;
}

double nelbo(const DiscreteLvm& lvm, const QuantizedDist<std::uint64_t>& data) {
  double total = 0;
  for (std::uint64_t x : data.symbols()) {
    const auto& q = lvm.posterior(x);
    double per_x = 0;
    for (std::uint64_t z = 0; z < lvm.latent_count(); ++z) {
      const double qz = q.probability(z);
      per_x += qz * (std::log2(qz) - std::log2(lvm.conditional(z).probability(x)) -
                     std::log2(lvm.prior().probability(z)));
    }
    total += data.probability(x) * per_x;
  }
  return total;
}

double marginal_cross_entropy(const DiscreteLvm& lvm, const QuantizedDist<std::uint64_t>& data) {
  double total = 0;
  for (std::uint64_t x : data.symbols()) {
    double px = 0;
    for (std::uint64_t z = 0; z < lvm.latent_count(); ++z)
      px += lvm.prior().probability(z) * lvm.conditional(z).probability(x);
    total -= data.probability(x) * std::log2(px);
  }
  return total;
}

}  // namespace permucodec
