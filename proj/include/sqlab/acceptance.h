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

#ifndef SQLAB_ACCEPTANCE_H_
#define SQLAB_ACCEPTANCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqlab/serialize.h"

namespace sqlab {

// The end-to-end verification suite shared by the acceptance test binary and
// `sqlab verify-all`. Every tolerance, trial count and runtime limit is fixed
// here.
struct AcceptanceOptions {
  std::uint64_t seed = 20260116;
  int workers = 1;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  Json data;
};

inline constexpr int kAcceptanceCriteria = 10;

CriterionResult run_criterion(int id, const AcceptanceOptions& options);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

// "[PASS] AC3 Moment formulas: ... (1.23 s)"
std::string format_line(const CriterionResult& r);

}  // namespace sqlab

#endif  // SQLAB_ACCEPTANCE_H_
