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

// Bits-back coding with a discrete latent-variable model.
//
// Each observation x is coded by decoding a latent z from the approximate
// posterior Q(z | x), encoding x under P(x | z) and then z under the prior.
// In the large-state regime the mean growth per symbol is the negative
// evidence lower bound.

#ifndef PERMUCODEC_BBANS_HPP
#define PERMUCODEC_BBANS_HPP

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "permucodec/ans.hpp"

namespace permucodec {

/// Latents are 0..|Z|-1 and observations 0..|X|-1.
class DiscreteLvm {
 public:
  DiscreteLvm(QuantizedDist<std::uint64_t> prior, std::vector<QuantizedDist<std::uint64_t>> conditional,
              std::vector<QuantizedDist<std::uint64_t>> posterior);

  /// Rows of weights: prior over Z, one row over X per z, one row over Z per x.
  static DiscreteLvm from_weights(std::span<const std::uint64_t> prior,
                                  const std::vector<std::vector<std::uint64_t>>& conditional,
                                  const std::vector<std::vector<std::uint64_t>>& posterior);

  const QuantizedDist<std::uint64_t>& prior() const noexcept { return prior_; }
  const QuantizedDist<std::uint64_t>& conditional(std::uint64_t z) const;
  const QuantizedDist<std::uint64_t>& posterior(std::uint64_t x) const;

  std::uint64_t latent_count() const noexcept { return prior_.size(); }
  std::uint64_t observation_count() const noexcept { return posterior_.size(); }
  std::uint64_t latent_precision() const noexcept { return prior_.precision(); }
  std::uint64_t observation_precision() const noexcept { return conditional_.front().precision(); }

 private:
  QuantizedDist<std::uint64_t> prior_;
  std::vector<QuantizedDist<std::uint64_t>> conditional_;
  std::vector<QuantizedDist<std::uint64_t>> posterior_;
};

/// Model file: '#' starts a comment line. The first line holds N_Z N_X; then
/// the prior row, |Z| conditional rows and |X| posterior rows, whitespace
/// separated. |Z| and |X| are the lengths of the prior and first conditional
/// rows; each row must sum to its precision.
DiscreteLvm parse_lvm(std::istream& in);
DiscreteLvm load_lvm(const std::string& path);

/// Optionally reports the latent drawn for each symbol.
void bbans_encode(AnsState& s, std::span<const std::uint64_t> xs, const DiscreteLvm& lvm,
                  std::vector<std::uint64_t>* latents = nullptr);

std::vector<std::uint64_t> bbans_decode(AnsState& s, std::size_t count, const DiscreteLvm& lvm);

/// E_x E_{z ~ Q(.|x)} [log2 Q(z|x) - log2 P(x|z) - log2 P(z)], with x drawn
/// from `data`.
double nelbo(const DiscreteLvm& lvm, const QuantizedDist<std::uint64_t>& data);

/// -E_x log2 P(x) under the model marginal.
double marginal_cross_entropy(const DiscreteLvm& lvm, const QuantizedDist<std::uint64_t>& data);

}  // namespace permucodec

#endif  // PERMUCODEC_BBANS_HPP
