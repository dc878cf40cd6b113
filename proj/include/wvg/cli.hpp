// Copyright 2026 The wvg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WVG_CLI_HPP_
#define WVG_CLI_HPP_

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace wvg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInterrupted = 130;

// Runs one command line (without the program name). `stop` is polled by
// long-running commands; once set they flush partial output and return
// kExitInterrupted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::atomic<bool>* stop = nullptr);

}  // namespace wvg

#endif  // WVG_CLI_HPP_
