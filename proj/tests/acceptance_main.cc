// Copyright 2026 The sqlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <cstdio>
#include <iostream>

#include "sqlab/acceptance.h"

int main() {
  sqlab::AcceptanceOptions opt;
  const auto results = sqlab::run_acceptance(opt);
  int passed = 0;
  for (const auto& r : results) {
    std::cout << sqlab::format_line(r) << '\n';
    passed += r.passed;
  }
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
