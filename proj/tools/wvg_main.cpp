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

#include <atomic>
#include <csignal>
#include <iostream>
#include <string>
#include <vector>

#include "wvg/cli.hpp"

namespace {

std::atomic<bool> g_stop{false};

void on_interrupt(int) { g_stop.store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_interrupt);
  std::signal(SIGTERM, on_interrupt);
  std::vector<std::string> args(argv + 1, argv + argc);
  const int code = wvg::run_cli(args, std::cout, std::cerr, &g_stop);
  std::cout.flush();
  return g_stop.load() ? wvg::kExitInterrupted : code;
}
