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

#ifndef SQLAB_SERIALIZE_H_
#define SQLAB_SERIALIZE_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "sqlab/analytic.h"
#include "sqlab/bounds.h"
#include "sqlab/design.h"
#include "sqlab/distribution.h"
#include "sqlab/montecarlo.h"
#include "sqlab/sq.h"

namespace sqlab {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.3.0";

// {"n": n, "probs": [...]}
Json to_json(const BornDistribution& p);
BornDistribution distribution_from_json(const Json& j);

// {"n": n, "table": [...]}
Json to_json(const QueryFunction& phi);
QueryFunction query_from_json(const Json& j);

// Counts are exact decimal strings; the ratio is "num/den" plus a double.
Json to_json(const StabilizerCensus& c);
StabilizerCensus census_from_json(const Json& j);

Json to_json(const DesignDeviationReport& r);
DesignDeviationReport design_report_from_json(const Json& j);

// Values beyond double range are written as null; log2_value is always set
// ("-inf" string for zero).
Json to_json(const BoundResult& r);
BoundResult bound_from_json(const Json& j);

// Per-trial samples are not embedded.
Json to_json(const EstimateResult& r);
EstimateResult estimate_from_json(const Json& j);

Json to_json(const VarianceCheck& v);
Json to_json(const DecisionOutcome& d);

// Envelope for JSON-lines result files.
Json make_record(const std::string& command, const Json& params,
                 const Json& result, std::uint64_t seed);

void write_csv(std::ostream& os, const BornDistribution& p);
void write_samples_csv(std::ostream& os, const EstimateResult& r);

}  // namespace sqlab

#endif  // SQLAB_SERIALIZE_H_
