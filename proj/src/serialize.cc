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

#include "sqlab/serialize.h"

#include <cmath>
#include <limits>
#include <ostream>

#include "sqlab/error.h"

namespace sqlab {
namespace {

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json log2_json(double v) {
  if (v == -std::numeric_limits<double>::infinity()) return "-inf";
  if (v == std::numeric_limits<double>::infinity()) return "inf";
  return v;
}

double log2_from(const Json& j) {
  if (j.is_string()) {
    return j.get<std::string>() == "-inf" ? -std::numeric_limits<double>::infinity()
                                          : std::numeric_limits<double>::infinity();
  }
  return j.get<double>();
}

}  // namespace

Json to_json(const BornDistribution& p) {
  return {{"n", p.num_qubits()},
          {"probs", std::vector<double>(p.probs().begin(), p.probs().end())}};
}

BornDistribution distribution_from_json(const Json& j) {
  try {
    return BornDistribution::from_probs(j.at("n").get<int>(),
                                        j.at("probs").get<std::vector<double>>());
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("distribution JSON: ") + e.what());
  }
}

Json to_json(const QueryFunction& phi) {
  return {{"n", phi.num_qubits()},
          {"table", std::vector<double>(phi.table().begin(), phi.table().end())}};
}

QueryFunction query_from_json(const Json& j) {
  try {
    return QueryFunction(j.at("n").get<int>(),
                         j.at("table").get<std::vector<double>>());
  } catch (const Json::exception& e) {
    throw PreconditionError(std::string("query JSON: ") + e.what());
  }
}

Json to_json(const StabilizerCensus& c) {
  return {{"n", c.n},
          {"total", c.total.str()},
          {"uniform_output", c.uniform_output.str()},
          {"ratio", boost::multiprecision::numerator(c.ratio).str() + "/" +
                        boost::multiprecision::denominator(c.ratio).str()},
          {"ratio_value", c.ratio.convert_to<double>()}};
}

StabilizerCensus census_from_json(const Json& j) {
  StabilizerCensus c;
  c.n = j.at("n").get<int>();
  c.total = BigInt(j.at("total").get<std::string>());
  c.uniform_output = BigInt(j.at("uniform_output").get<std::string>());
  const std::string ratio = j.at("ratio").get<std::string>();
  const auto slash = ratio.find('/');
  c.ratio = Rational(BigInt(ratio.substr(0, slash)), BigInt(ratio.substr(slash + 1)));
  return c;
}

Json to_json(const DesignDeviationReport& r) {
  return {{"n", r.n},
          {"t", r.t},
          {"trials", r.trials},
          {"exact", r.exact},
          {"deviation", r.deviation},
          {"stderr", r.stderr_estimate}};
}

DesignDeviationReport design_report_from_json(const Json& j) {
  DesignDeviationReport r;
  r.n = j.at("n").get<int>();
  r.t = j.at("t").get<int>();
  r.trials = j.at("trials").get<std::size_t>();
  r.exact = j.at("exact").get<bool>();
  r.deviation = j.at("deviation").get<double>();
  r.stderr_estimate = j.at("stderr").get<double>();
  return r;
}

Json to_json(const BoundResult& r) {
  Json pre = Json::array();
  for (const Precondition& p : r.preconditions) {
    pre.push_back({{"name", p.name},
                   {"satisfied", p.satisfied},
                   {"threshold", number_or_null(p.threshold)},
                   {"detail", p.detail}});
  }
  Json extras = Json::object();
  for (const auto& [k, v] : r.extras) extras[k] = number_or_null(v);
  return {{"value", number_or_null(r.value)},
          {"log2_value", log2_json(r.log2_value)},
          {"informative", r.informative},
          {"preconditions", pre},
          {"extras", extras},
          {"notes", r.notes}};
}

BoundResult bound_from_json(const Json& j) {
  BoundResult r;
  r.log2_value = log2_from(j.at("log2_value"));
  r.value = j.at("value").is_null() ? std::exp2(r.log2_value)
                                    : j.at("value").get<double>();
  r.informative = j.at("informative").get<bool>();
  for (const Json& p : j.at("preconditions")) {
    r.preconditions.push_back(
        {p.at("name").get<std::string>(), p.at("satisfied").get<bool>(),
         p.at("threshold").is_null() ? std::numeric_limits<double>::infinity()
                                     : p.at("threshold").get<double>(),
         p.at("detail").get<std::string>()});
  }
  for (const auto& [k, v] : j.at("extras").items()) {
    r.extras.emplace_back(k, v.is_null() ? std::numeric_limits<double>::infinity()
                                         : v.get<double>());
  }
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

Json to_json(const EstimateResult& r) {
  Json j = {{"experiment", r.experiment},
            {"mean", r.mean},
            {"stderr", r.stderr_},
            {"variance", r.variance},
            {"trials", r.trials},
            {"seed", std::to_string(r.seed)},
            {"workers", r.workers},
            {"elapsed_seconds", r.elapsed_seconds},
            {"exact", r.exact}};
  if (r.tail) {
    j["tail"] = {{"threshold", r.tail->threshold},
                 {"strict", r.tail->strict},
                 {"hits", r.tail->hits},
                 {"probability", r.tail->probability},
                 {"wilson_lo", r.tail->wilson_lo},
                 {"wilson_hi", r.tail->wilson_hi}};
  }
  return j;
}

EstimateResult estimate_from_json(const Json& j) {
  EstimateResult r;
  r.experiment = j.at("experiment").get<std::string>();
  r.mean = j.at("mean").get<double>();
  r.stderr_ = j.at("stderr").get<double>();
  r.variance = j.at("variance").get<double>();
  r.trials = j.at("trials").get<std::size_t>();
  r.seed = std::stoull(j.at("seed").get<std::string>());
  r.workers = j.at("workers").get<int>();
  r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
  r.exact = j.at("exact").get<bool>();
  if (j.contains("tail")) {
    const Json& t = j.at("tail");
    TailEstimate tail;
    tail.threshold = t.at("threshold").get<double>();
    tail.strict = t.at("strict").get<bool>();
    tail.hits = t.at("hits").get<std::size_t>();
    tail.probability = t.at("probability").get<double>();
    tail.wilson_lo = t.at("wilson_lo").get<double>();
    tail.wilson_hi = t.at("wilson_hi").get<double>();
    r.tail = tail;
  }
  return r;
}

Json to_json(const VarianceCheck& v) {
  return {{"n", v.n},
          {"d", v.depth},
          {"trials", v.trials},
          {"mean", v.mean},
          {"empirical_variance", v.empirical_variance},
          {"variance_stderr", v.variance_stderr},
          {"bound", v.bound},
          {"regime_valid", v.regime_valid},
          {"haar_variance", v.haar_variance},
          {"below_bound", v.below_bound},
          {"matches_haar", v.matches_haar}};
}

Json to_json(const DecisionOutcome& d) {
  Json j = {{"verdict", to_string(d.verdict)},
            {"queries_used", d.queries_used},
            {"learner_queries", d.learner_queries},
            {"reason", d.reason}};
  if (d.witness) j["witness"] = to_json(*d.witness);
  if (d.witness_answer) j["witness_answer"] = *d.witness_answer;
  return j;
}

Json make_record(const std::string& command, const Json& params,
                 const Json& result, std::uint64_t seed) {
  return {{"command", command},
          {"version", kVersion},
          {"seed", std::to_string(seed)},
          {"params", params},
          {"result", result}};
}

void write_csv(std::ostream& os, const BornDistribution& p) {
  os << "x,bits,probability\n";
  const int n = p.num_qubits();
  os.precision(17);
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::string bits(n, '0');
    // Qubit 0 is printed rightmost.
    for (int q = 0; q < n; ++q) {
      if ((x >> q) & 1u) bits[n - 1 - q] = '1';
    }
    os << x << "," << bits << "," << p[x] << "\n";
  }
}

void write_samples_csv(std::ostream& os, const EstimateResult& r) {
  os << "trial,value\n";
  os.precision(17);
  for (std::size_t t = 0; t < r.samples.size(); ++t) {
    os << t << "," << r.samples[t] << "\n";
  }
}

}  // namespace sqlab
