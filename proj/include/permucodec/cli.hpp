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

#ifndef PERMUCODEC_CLI_HPP
#define PERMUCODEC_CLI_HPP

#include <ostream>

namespace permucodec {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCorrupt = 3;

/// Entry point of the permucodec command: encode, decode and info.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permucodec

#endif  // PERMUCODEC_CLI_HPP
