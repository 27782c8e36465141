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

// Information-content arithmetic: exact big-integer combinatorics reduced to
// bits at the very end, plus log-gamma variants for sizes where the exact
// integers would be unreasonably large.

#ifndef PERMUCODEC_BITS_HPP
#define PERMUCODEC_BITS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>

namespace permucodec {

/// log2 of a positive integer, accurate to double precision at any size.
double log2_of(const mpz_class& x);

/// log2 of a positive rational.
double log2_of(const mpq_class& x);

/// Product of all factors, evaluated as a balanced tree.
mpz_class product(std::span<const mpz_class> factors);

mpz_class factorial(std::uint64_t n);

/// x(x+1)...(x+k-1); 1 when k = 0.
mpz_class rising_factorial(std::uint64_t x, std::uint64_t k);

/// n! / prod(counts!), with n = sum(counts).
mpz_class multinomial(std::span<const std::uint64_t> counts);

/// Exact log2(n!).
double log2_factorial_exact(std::uint64_t n);

/// log2(Gamma(x + 1)) via long-double lgamma; valid for real x >= 0.
double log2_factorial(double x);

/// Exact log2 of the multinomial coefficient.
double log2_multinomial(std::span<const std::uint64_t> counts);

}  // namespace permucodec

#endif  // PERMUCODEC_BITS_HPP
