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

#ifndef SQLAB_SQ_H_
#define SQLAB_SQ_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sqlab/distribution.h"
#include "sqlab/rng.h"

namespace sqlab {

enum class OracleMode { kExact, kAdversarial, kSampled };

std::string to_string(OracleMode mode);

// Statistical query oracle Stat_tau(P) over a concrete target distribution.
//  exact:       answers P[phi]
//  adversarial: answers P[phi] moved toward reference[phi] by
//               min(tau, |P[phi] - reference[phi]|)
//  sampled:     empirical mean of phi over m draws from P; answers may leave
//               the tau window, which is recorded per query
class SqOracle {
 public:
  struct Entry {
    QueryFunction phi;
    double answer;
    double truth;
    bool violated;  // |answer - truth| > tau (+1e-12 rounding slack)
  };

  static SqOracle exact(BornDistribution target, double tau);
  static SqOracle adversarial(BornDistribution target, double tau,
                              BornDistribution reference);
  static SqOracle sampled(BornDistribution target, double tau,
                          std::size_t samples, RngStream rng);

  double query(const QueryFunction& phi);

  OracleMode mode() const { return mode_; }
  double tau() const { return tau_; }
  int num_qubits() const { return target_.num_qubits(); }
  const std::vector<Entry>& log() const { return log_; }
  std::size_t queries_issued() const { return log_.size(); }

  // Caps the total number of queries; exceeding it throws
  // PreconditionError. nullopt removes the cap.
  void set_query_limit(std::optional<std::size_t> limit) { limit_ = limit; }

  // 2 exp(-m tau^2 / 2): Hoeffding bound on the chance a sampled answer misses
  // the tau window (phi takes values in [-1, 1]). Zero for the other modes.
  double violation_probability_bound() const;

 private:
  SqOracle(OracleMode mode, BornDistribution target, double tau);

  OracleMode mode_;
  BornDistribution target_;
  double tau_;
  std::optional<BornDistribution> reference_;
  std::size_t samples_ = 0;
  std::optional<RngStream> rng_;
  std::vector<double> cdf_;
  std::vector<Entry> log_;
  std::optional<std::size_t> limit_;
};

// Returns a hypothesis distribution or nullopt (no representation found).
struct Learner {
  std::string name;
  std::size_t budget = 0;
  std::function<std::optional<BornDistribution>(SqOracle&)> run;
};

// Always outputs the uniform distribution; issues no queries.
Learner trivial_uniform_learner(int n);

// Queries the indicator of every basis label and returns the class member
// closest in TV to the answer vector. Exact on any finite class whose members
// are more than 2^n tau apart in TV. Budget 2^n.
Learner nearest_member_learner(std::vector<BornDistribution> members);

// A finite distribution class with exact-TV closeness search.
struct DistributionClass {
  std::vector<BornDistribution> members;

  // min over members of d_TV(p, member) <= eps.
  bool has_member_within(const BornDistribution& p, double eps) const;
};

enum class Verdict { kEqualsReference, kInClass };

std::string to_string(Verdict v);

struct DecisionOutcome {
  Verdict verdict = Verdict::kEqualsReference;
  std::size_t queries_used = 0;
  std::size_t learner_queries = 0;
  std::optional<QueryFunction> witness;
  std::optional<double> witness_answer;
  std::string reason;
};

// Decides "P = Q" versus "P in class" with a learner plus at most one extra
// query:
//  1. run the learner; no hypothesis -> "P = Q"
//  2. hypothesis not within eps of the class -> "P = Q"
//  3. phi = indicator of {x : P'(x) > Q(x)}; ask v; "P = Q" iff |Q[phi] - v| <= tau
// Requires tau <= eps and d_TV(member, Q) > eps + tau for every member (both
// checked; PreconditionError otherwise).
DecisionOutcome decide_via_learner(const Learner& learner,
                                   const DistributionClass& cls,
                                   const BornDistribution& reference,
                                   double eps, double tau, SqOracle& oracle);

}  // namespace sqlab

#endif  // SQLAB_SQ_H_
