// Copyright 2026 The Loschmidt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>

#include "loschmidt/suite.hpp"

int main() {
  int failed = 0;
  for (const auto& check : loschmidt::suite_checks()) {
    const loschmidt::CheckResult r = check.run();
    std::printf("%s\n", loschmidt::format_check(r).c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  std::printf("%d of 7 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
