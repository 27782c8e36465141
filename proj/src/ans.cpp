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

#include "permucodec/ans.hpp"

#include <bit>

namespace permucodec {

namespace {

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

void check_range(Range r, std::uint64_t precision) {
  if (precision == 0) throw InvalidArgument("precision must be >= 1");
  if (r.freq == 0 || r.start >= precision || r.freq > precision - r.start)
    throw InvalidArgument("range does not fit the precision");
}

// s <- N * s + c, with c < N.
void multiply_add(mpz_class& s, std::uint64_t precision, std::uint64_t c) {
  if (precision == 1) return;
  if (is_power_of_two(precision)) {
    mpz_mul_2exp(s.get_mpz_t(), s.get_mpz_t(), std::countr_zero(precision));
    if (c != 0) mpz_add_ui(s.get_mpz_t(), s.get_mpz_t(), c);
  } else {
    mpz_mul_ui(s.get_mpz_t(), s.get_mpz_t(), precision);
    if (c != 0) mpz_add_ui(s.get_mpz_t(), s.get_mpz_t(), c);
  }
}

// s <- s / d, returning s % d.
std::uint64_t divide(mpz_class& q, const mpz_class& s, std::uint64_t d) {
  if (is_power_of_two(d)) {
    const auto shift = static_cast<mp_bitcnt_t>(std::countr_zero(d));
    const std::uint64_t rem = mpz_getlimbn(s.get_mpz_t(), 0) & (d - 1);
    mpz_fdiv_q_2exp(q.get_mpz_t(), s.get_mpz_t(), shift);
    return rem;
  }
  return mpz_fdiv_q_ui(q.get_mpz_t(), s.get_mpz_t(), d);
}

}  // namespace

AnsState::AnsState(mpz_class value) : value_(std::move(value)) {
  if (sgn(value_) < 0) throw InvalidArgument("ANS state must be non-negative");
}

AnsState AnsState::seeded(unsigned bits) {
  AnsState s;
  mpz_setbit(s.value_.get_mpz_t(), bits);
  return s;
}

std::size_t AnsState::bit_length() const noexcept {
  if (sgn(value_) == 0) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

void AnsState::push(Range r, std::uint64_t precision) {
  check_range(r, precision);
  invalidate();
  if (r.freq == 1) {
    multiply_add(value_, precision, r.start);
    return;
  }
  const std::uint64_t rem = divide(value_, value_, r.freq);
  multiply_add(value_, precision, r.start + rem);
}

std::uint64_t AnsState::peek(std::uint64_t precision) const {
  if (precision == 0) throw InvalidArgument("precision must be >= 1");
  if (cached_precision_ != precision) {
    remainder_ = divide(quotient_, value_, precision);
    cached_precision_ = precision;
  }
  return remainder_;
}

void AnsState::pop(Range r, std::uint64_t precision) {
  check_range(r, precision);
  const std::uint64_t j = peek(precision);
  if (j < r.start || j - r.start >= r.freq)
    throw InvalidArgument("range does not own the state's index");
  value_.swap(quotient_);
  invalidate();
  if (r.freq != 1) mpz_mul_ui(value_.get_mpz_t(), value_.get_mpz_t(), r.freq);
  if (j != r.start) mpz_add_ui(value_.get_mpz_t(), value_.get_mpz_t(), j - r.start);
}

mpz_class ans_encode(const mpz_class& s, Range r, std::uint64_t precision) {
  if (sgn(s) < 0) throw InvalidArgument("ANS state must be non-negative");
  AnsState state(s);
  state.push(r, precision);
  return state.value();
}

void uniform_encode(AnsState& s, std::uint64_t x, std::uint64_t alphabet_size) {
  if (alphabet_size == 0) throw InvalidArgument("alphabet size must be >= 1");
  if (x >= alphabet_size) throw InvalidArgument("symbol outside uniform alphabet");
  s.push({1, x}, alphabet_size);
}

std::uint64_t uniform_decode(AnsState& s, std::uint64_t alphabet_size) {
  if (alphabet_size == 0) throw InvalidArgument("alphabet size must be >= 1");
  const std::uint64_t x = s.peek(alphabet_size);
  s.pop({1, x}, alphabet_size);
  return x;
}

// Pushing r[L-1] first and r[0] last under uniform(256) is the same integer as
// shifting by 8L bits and or-ing in r read as a little-endian number.
void bytes_encode(AnsState& s, std::string_view record, std::uint64_t max_length) {
  if (max_length == UINT64_MAX) throw InvalidArgument("record length bound too large");
  if (record.size() > max_length) throw InvalidArgument("record longer than the length bound");
  if (!record.empty()) {
    s.invalidate();
    mpz_class tail;
    mpz_import(tail.get_mpz_t(), record.size(), -1, 1, 0, 0, record.data());
    mpz_mul_2exp(s.value_.get_mpz_t(), s.value_.get_mpz_t(), 8 * record.size());
    mpz_ior(s.value_.get_mpz_t(), s.value_.get_mpz_t(), tail.get_mpz_t());
  }
  uniform_encode(s, record.size(), max_length + 1);
}

std::string bytes_decode(AnsState& s, std::uint64_t max_length) {
  if (max_length == UINT64_MAX) throw InvalidArgument("record length bound too large");
  const std::uint64_t length = uniform_decode(s, max_length + 1);
  std::string record(length, '\0');
  if (length == 0) return record;
  s.invalidate();
  mpz_class tail;
  mpz_fdiv_r_2exp(tail.get_mpz_t(), s.value_.get_mpz_t(), 8 * length);
  std::size_t written = 0;
  mpz_export(record.data(), &written, -1, 1, 0, 0, tail.get_mpz_t());
  mpz_fdiv_q_2exp(s.value_.get_mpz_t(), s.value_.get_mpz_t(), 8 * length);
  return record;
}

std::vector<std::uint8_t> state_serialize(const AnsState& s) {
  if (sgn(s.value()) == 0) return {0};
  std::vector<std::uint8_t> out((s.bit_length() + 7) / 8);
  std::size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 0, 0, s.value().get_mpz_t());
  out.resize(written);
  return out;
}

AnsState state_deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw CorruptMessage("malformed state");
  if (bytes.size() > 1 && bytes[0] == 0) throw CorruptMessage("malformed state");
  mpz_class v;
  mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 0, 0, bytes.data());
  return AnsState(std::move(v));
}

}  // namespace permucodec
