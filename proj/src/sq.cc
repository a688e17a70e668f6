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

#include "sqlab/sq.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sqlab/error.h"

namespace sqlab {

std::string to_string(OracleMode mode) {
  switch (mode) {
    case OracleMode::kExact: return "exact";
    case OracleMode::kAdversarial: return "adversarial";
    case OracleMode::kSampled: return "sampled";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  return v == Verdict::kEqualsReference ? "P=Q" : "P in D";
}

SqOracle::SqOracle(OracleMode mode, BornDistribution target, double tau)
    : mode_(mode), target_(std::move(target)), tau_(tau) {
  if (!(tau > 0.0 && tau < 1.0)) {
    throw PreconditionError("SQ oracle: tau must lie in (0, 1)");
  }
}

SqOracle SqOracle::exact(BornDistribution target, double tau) {
  return SqOracle(OracleMode::kExact, std::move(target), tau);
}

SqOracle SqOracle::adversarial(BornDistribution target, double tau,
                               BornDistribution reference) {
  if (reference.num_qubits() != target.num_qubits()) {
    throw PreconditionError("SQ oracle: reference has a different n");
  }
  SqOracle o(OracleMode::kAdversarial, std::move(target), tau);
  o.reference_ = std::move(reference);
  return o;
}

SqOracle SqOracle::sampled(BornDistribution target, double tau,
                           std::size_t samples, RngStream rng) {
  if (samples == 0) throw PreconditionError("SQ oracle: sample count must be > 0");
  SqOracle o(OracleMode::kSampled, std::move(target), tau);
  o.samples_ = samples;
  o.rng_ = rng;
  o.cdf_.resize(o.target_.size());
  double acc = 0.0;
  for (std::size_t x = 0; x < o.cdf_.size(); ++x) {
    acc += o.target_[x];
    o.cdf_[x] = acc;
  }
  return o;
}

double SqOracle::query(const QueryFunction& phi) {
  if (phi.num_qubits() != target_.num_qubits()) {
    throw PreconditionError("SQ query: phi has n=" +
                            std::to_string(phi.num_qubits()) +
                            ", target has n=" +
                            std::to_string(target_.num_qubits()));
  }
  if (limit_ && log_.size() >= *limit_) {
    throw PreconditionError("SQ query: budget of " + std::to_string(*limit_) +
                            " queries exhausted");
  }
  const double truth = functional(target_, phi);
  double answer = truth;
  switch (mode_) {
    case OracleMode::kExact:
      break;
    case OracleMode::kAdversarial: {
      const double gap = functional(*reference_, phi) - truth;
      answer = truth + std::copysign(std::min(tau_, std::abs(gap)), gap);
      break;
    }
    case OracleMode::kSampled: {
      double sum = 0.0;
      const double total = cdf_.back();
      for (std::size_t i = 0; i < samples_; ++i) {
        const double u = rng_->uniform() * total;
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        const std::size_t x =
            std::min<std::size_t>(it - cdf_.begin(), cdf_.size() - 1);
        sum += phi[x];
      }
      answer = sum / static_cast<double>(samples_);
      break;
    }
  }
  // Rounding slack so an answer placed exactly tau away is not flagged.
  log_.push_back({phi, answer, truth, std::abs(answer - truth) > tau_ + 1e-12});
  return answer;
}

double SqOracle::violation_probability_bound() const {
  if (mode_ != OracleMode::kSampled) return 0.0;
  return std::min(1.0, 2.0 * std::exp(-static_cast<double>(samples_) * tau_ *
                                      tau_ / 2.0));
}

Learner trivial_uniform_learner(int n) {
  return Learner{"trivial_uniform", 0,
                 [n](SqOracle&) -> std::optional<BornDistribution> {
                   return BornDistribution::uniform(n);
                 }};
}

Learner nearest_member_learner(std::vector<BornDistribution> members) {
  if (members.empty()) throw PreconditionError("nearest_member_learner: empty class");
  const int n = members.front().num_qubits();
  const std::size_t budget = std::size_t{1} << n;
  return Learner{
      "nearest_member", budget,
      [members = std::move(members), n](SqOracle& oracle)
          -> std::optional<BornDistribution> {
        const std::size_t dim = std::size_t{1} << n;
        std::vector<double> estimate(dim);
        for (std::uint64_t x = 0; x < dim; ++x) {
          const std::uint64_t label[1] = {x};
          estimate[x] = oracle.query(QueryFunction::indicator(n, label));
        }
        const BornDistribution* best = nullptr;
        double best_dist = std::numeric_limits<double>::infinity();
        for (const BornDistribution& m : members) {
          double d = 0.0;
          for (std::size_t x = 0; x < dim; ++x) d += std::abs(m[x] - estimate[x]);
          if (d < best_dist) {
            best_dist = d;
            best = &m;
          }
        }
        return *best;
      }};
}

bool DistributionClass::has_member_within(const BornDistribution& p,
                                          double eps) const {
  return std::any_of(members.begin(), members.end(), [&](const auto& m) {
    return tv_distance(p, m) <= eps;
  });
}

DecisionOutcome decide_via_learner(const Learner& learner,
                                   const DistributionClass& cls,
                                   const BornDistribution& reference,
                                   double eps, double tau, SqOracle& oracle) {
  if (tau > eps) {
    throw PreconditionError(
        "decide_via_learner: tau > eps is the indistinguishable regime");
  }
  for (const BornDistribution& m : cls.members) {
    if (!(tv_distance(m, reference) > eps + tau)) {
      throw PreconditionError(
          "decide_via_learner: every class member must be more than eps + tau "
          "from the reference in TV");
    }
  }
  const std::size_t before = oracle.queries_issued();
  oracle.set_query_limit(before + learner.budget);
  std::optional<BornDistribution> hypothesis = learner.run(oracle);
  oracle.set_query_limit(std::nullopt);

  DecisionOutcome out;
  out.learner_queries = oracle.queries_issued() - before;
  out.queries_used = out.learner_queries;
  if (!hypothesis) {
    out.reason = "learner returned no representation";
    return out;
  }
  if (!cls.has_member_within(*hypothesis, eps)) {
    out.reason = "hypothesis is not eps-close to the class";
    return out;
  }
  QueryFunction phi = max_tv_witness(*hypothesis, reference);
  const double v = oracle.query(phi);
  out.queries_used += 1;
  out.witness_answer = v;
  if (std::abs(functional(reference, phi) - v) <= tau) {
    out.verdict = Verdict::kEqualsReference;
    out.reason = "witness answer within tau of Q[phi]";
  } else {
    out.verdict = Verdict::kInClass;
    out.reason = "witness answer more than tau from Q[phi]";
  }
  out.witness = std::move(phi);
  return out;
}

}  // namespace sqlab
