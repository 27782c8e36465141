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

#include "permucodec/bits.hpp"

#include <cmath>
#include <vector>

#include "permucodec/error.hpp"

namespace permucodec {

double log2_of(const mpz_class& x) {
  if (sgn(x) <= 0) throw InvalidArgument("log2 of a non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exponent);
}

double log2_of(const mpq_class& x) {
  if (sgn(x) <= 0) throw InvalidArgument("log2 of a non-positive rational");
  return log2_of(mpz_class(x.get_num())) - log2_of(mpz_class(x.get_den()));
}

namespace {

mpz_class product_range(std::span<const mpz_class> f) {
  if (f.empty()) return 1;
  if (f.size() == 1) return f[0];
  const std::size_t half = f.size() / 2;
  return product_range(f.first(half)) * product_range(f.subspan(half));
}

// Product of the consecutive integers lo..hi-1.
mpz_class consecutive_product(std::uint64_t lo, std::uint64_t hi) {
  if (hi <= lo) return 1;
  if (hi - lo <= 16) {
    mpz_class out = 1;
    for (std::uint64_t v = lo; v < hi; ++v) mpz_mul_ui(out.get_mpz_t(), out.get_mpz_t(), v);
    return out;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  return consecutive_product(lo, mid) * consecutive_product(mid, hi);
}

}  // namespace

mpz_class product(std::span<const mpz_class> factors) { return product_range(factors); }

mpz_class factorial(std::uint64_t n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class rising_factorial(std::uint64_t x, std::uint64_t k) {
  if (k == 0) return 1;
  if (x == 0) return 0;
  return consecutive_product(x, x + k);
}

mpz_class multinomial(std::span<const std::uint64_t> counts) {
  std::uint64_t n = 0;
  std::vector<mpz_class> denominators;
  denominators.reserve(counts.size());
  for (std::uint64_t c : counts) {
    n += c;
    if (c > 1) denominators.push_back(factorial(c));
  }
  mpz_class out = factorial(n);
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), product(denominators).get_mpz_t());
  return out;
}

double log2_factorial_exact(std::uint64_t n) {
  if (n < 2) return 0.0;
  return log2_of(factorial(n));
}

double log2_factorial(double x) {
  if (x < 0) throw InvalidArgument("factorial of a negative number");
  return static_cast<double>(std::lgamma(static_cast<long double>(x) + 1.0L) / std::log(2.0L));
}

double log2_multinomial(std::span<const std::uint64_t> counts) {
  return log2_of(multinomial(counts));
}

}  // namespace permucodec
