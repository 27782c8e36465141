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

#include "permucodec/rcc.hpp"

#include <cmath>

#include "permucodec/bits.hpp"

namespace permucodec {

namespace {

void check_sizes(std::span<const std::uint64_t> sizes) {
  for (std::uint64_t n : sizes)
    if (n == 0) throw InvalidArgument("cluster sizes must be >= 1");
}

std::uint64_t total(std::span<const std::uint64_t> sizes) {
  std::uint64_t n = 0;
  for (std::uint64_t s : sizes) n += s;
  return n;
}

}  // namespace

double partition_order_info(std::span<const std::uint64_t> sizes) {
  check_sizes(sizes);
  double bits = 0;
  for (std::uint64_t n : sizes) bits += log2_factorial(static_cast<double>(n - 1));
  return bits;
}

double partition_order_info_exact(std::span<const std::uint64_t> sizes) {
  check_sizes(sizes);
  std::vector<mpz_class> factorials;
  for (std::uint64_t n : sizes)
    if (n > 2) factorials.push_back(factorial(n - 1));
  if (factorials.empty()) return 0.0;
  return log2_of(product(factorials));
}

double implied_log_prob(std::span<const std::uint64_t> sizes) {
  return partition_order_info(sizes) - log2_factorial(static_cast<double>(total(sizes)));
}

SchemeComparison compare_schemes(std::span<const std::uint64_t> sizes) {
  check_sizes(sizes);
  const std::uint64_t n = total(sizes);
  SchemeComparison out{partition_order_info(sizes), 0.0, 0.0};
  std::uint64_t before = 0;
  for (std::uint64_t size : sizes) {
    out.roc1 += log2_factorial(static_cast<double>(size)) - std::log2(static_cast<double>(n - before));
    before += size;
  }
  out.roc2 = out.roc1 + log2_factorial(static_cast<double>(sizes.size())) -
             (n == 0 ? 0.0 : std::log2(static_cast<double>(n)));
  return out;
}

std::vector<std::uint64_t> max_savings_sizes(std::uint64_t n, std::uint64_t k) {
  if (k == 0 || k > n) throw InvalidArgument("need 1 <= k <= n clusters");
  std::vector<std::uint64_t> sizes(k, 1);
  sizes[0] = n - k + 1;
  return sizes;
}

std::vector<std::uint64_t> min_savings_sizes(std::uint64_t n, std::uint64_t k) {
  if (k == 0 || k > n) throw InvalidArgument("need 1 <= k <= n clusters");
  std::vector<std::uint64_t> sizes(k, n / k);
  for (std::uint64_t i = 0; i < n % k; ++i) ++sizes[i];
  return sizes;
}

double sqrt_clusters_bytes_per_element(double n) {
  if (n < 1) throw InvalidArgument("need n >= 1");
  const double side = std::sqrt(n);
  return side * log2_factorial(side - 1.0) / (8.0 * n);
}

}  // namespace permucodec
