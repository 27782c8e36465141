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

#ifndef PERMUCODEC_ERROR_HPP
#define PERMUCODEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace permucodec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments or inputs that violate an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A message that cannot have been produced by the matching encoder.
class CorruptMessage : public Error {
 public:
  explicit CorruptMessage(const std::string& detail = {})
      : Error(detail.empty() ? "corrupt message" : "corrupt message: " + detail) {}
};

/// Decoding succeeded structurally but the final state differs from the seed.
class IntegrityFailure : public Error {
 public:
  IntegrityFailure() : Error("integrity failure") {}
};

/// A bits-back sampling step found fewer bits in the state than it needs.
class StateDepleted : public Error {
 public:
  StateDepleted() : Error("state depleted") {}
};

/// Text or file input that does not parse.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace permucodec

#endif  // PERMUCODEC_ERROR_HPP
