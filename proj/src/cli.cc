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

#include "sqlab/cli.h"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "sqlab/acceptance.h"
#include "sqlab/analytic.h"
#include "sqlab/bounds.h"
#include "sqlab/circuit.h"
#include "sqlab/design.h"
#include "sqlab/distribution.h"
#include "sqlab/ensemble.h"
#include "sqlab/montecarlo.h"
#include "sqlab/rng.h"
#include "sqlab/serialize.h"
#include "sqlab/sq.h"
#include "sqlab/stabilizer.h"

namespace sqlab {
namespace {

using Params = std::map<std::string, std::string>;
using Row = std::vector<std::string>;

const std::vector<std::string> kSubcommands = {
    "bounds", "simulate", "estimate", "census", "design", "sq-demo", "verify-all"};

const std::set<std::string> kCommonKeys = {"n",       "d",   "trials", "seed",
                                           "workers", "out", "format"};

const std::map<std::string, std::set<std::string>> kSubcommandKeys = {
    {"bounds",
     {"dim", "dev", "tau", "lipschitz", "kind", "eps", "beta", "alpha", "xi",
      "delta", "c", "regime", "mode", "ball", "frac", "t"}},
    {"simulate", {"gate", "initial"}},
    {"estimate",
     {"ensemble", "observable", "phi-file", "phi-seed", "threshold", "strict",
      "samples-csv", "exponents", "points", "reference-file"}},
    {"census", {}},
    {"design", {"ensemble", "t"}},
    {"sq-demo", {"eps", "tau", "mode", "m"}},
    {"verify-all", {"only"}},
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

std::pair<std::string, std::string> split_assignment(const std::string& token) {
  const auto eq = token.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("expected key=value, got '" + token + "'");
  }
  return {normalize_key(trim(token.substr(0, eq))), trim(token.substr(eq + 1))};
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& expected) {
  throw ConfigError("invalid value for '" + key + "': '" + value + "' (expected " +
                    expected + ")");
}

long long parse_integer(const std::string& key, const std::string& value) {
  long long v = 0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end || value.empty()) bad_value(key, value, "integer");
  return v;
}

int parse_int(const std::string& key, const std::string& value, long long lo,
              long long hi) {
  const long long v = parse_integer(key, value);
  if (v < lo || v > hi) {
    bad_value(key, value,
              "integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

double parse_double(const std::string& key, const std::string& value) {
  if (value.empty()) bad_value(key, value, "number");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(value.c_str(), &end);
  if (end != value.c_str() + value.size() || errno == ERANGE || !std::isfinite(v)) {
    bad_value(key, value, "finite number");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  bad_value(key, value, "true or false");
}

std::vector<long long> parse_int_list(const std::string& key, const std::string& value) {
  std::vector<long long> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_integer(key, trim(item)));
  if (out.empty()) bad_value(key, value, "comma-separated integers");
  return out;
}

class ParamReader {
 public:
  explicit ParamReader(const Params& p) : p_(p) {}
  bool has(const std::string& k) const { return p_.count(k) > 0; }
  std::string str(const std::string& k, const std::string& fallback) const {
    const auto it = p_.find(k);
    return it == p_.end() ? fallback : it->second;
  }
  std::optional<double> opt_double(const std::string& k) const {
    const auto it = p_.find(k);
    if (it == p_.end()) return std::nullopt;
    return parse_double(k, it->second);
  }
  double dbl(const std::string& k) const {
    const auto v = opt_double(k);
    if (!v) throw ConfigError("missing required parameter '" + k + "'");
    return *v;
  }
  double dbl(const std::string& k, double fallback) const {
    return opt_double(k).value_or(fallback);
  }

 private:
  const Params& p_;
};

int require_n(const RunConfig& c) {
  if (!c.n) throw ConfigError("missing required parameter 'n'");
  return *c.n;
}

// ---------------------------------------------------------------- output

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

struct Output {
  Json result;
  std::vector<Row> rows;  // rows[0] is the header
  std::vector<std::string> comments;
  int exit_code = kExitOk;
};

void print_rows(const Output& o, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kCsv) {
    for (const Row& r : o.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
      out << '\n';
    }
    return;
  }
  std::vector<std::size_t> width;
  for (const Row& r : o.rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const Row& r : o.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << (i ? "  " : "");
      if (i + 1 < r.size()) {
        out << std::left << std::setw(static_cast<int>(width[i])) << r[i];
      } else {
        out << r[i];
      }
    }
    out << '\n';
  }
  for (const std::string& c : o.comments) out << "# " << c << '\n';
}

Json params_json(const RunConfig& c, std::uint64_t seed) {
  Json p = Json::object();
  if (!c.bound_name.empty()) p["name"] = c.bound_name;
  if (c.n) p["n"] = *c.n;
  if (c.d) p["d"] = *c.d;
  if (c.trials) p["trials"] = *c.trials;
  p["seed"] = std::to_string(seed);
  p["workers"] = c.workers;
  for (const auto& [k, v] : c.params) p[k] = v;
  return p;
}

void append_record(const RunConfig& c, const Json& record) {
  if (c.out.empty()) return;
  std::ofstream f(c.out, std::ios::app);
  if (!f) throw ConfigError("cannot open output file '" + c.out + "'");
  f << record.dump() << '\n';
}

// ---------------------------------------------------------------- bounds

Row bound_header(const BoundResult& r) {
  Row h = {"bound", "value", "log2", "informative"};
  for (const auto& [k, v] : r.extras) h.push_back(k);
  return h;
}

Row bound_row(const std::string& name, const BoundResult& r) {
  Row row = {name, num(r.value), num(r.log2_value), r.informative ? "true" : "false"};
  for (const auto& [k, v] : r.extras) row.push_back(num(v));
  return row;
}

void bound_comments(const BoundResult& r, std::vector<std::string>& out) {
  for (const Precondition& p : r.preconditions) {
    out.push_back("precondition " + p.name + ": " +
                  (p.satisfied ? "satisfied" : "VIOLATED") +
                  " (threshold " + num(p.threshold) + ")" +
                  (p.detail.empty() ? "" : " " + p.detail));
  }
  for (const std::string& note : r.notes) out.push_back("note: " + note);
}

BoundParams bound_params(const RunConfig& c, const ParamReader& p) {
  BoundParams b;
  b.n = require_n(c);
  b.d = c.d;
  b.eps = p.opt_double("eps");
  b.tau = p.opt_double("tau");
  b.beta = p.opt_double("beta");
  b.alpha = p.opt_double("alpha");
  b.delta = p.opt_double("delta");
  b.c = p.opt_double("c");
  b.xi = p.opt_double("xi");
  b.lipschitz = p.opt_double("lipschitz");
  return b;
}

Output run_bounds(const RunConfig& c) {
  const ParamReader p(c.params);
  const std::string& name = c.bound_name;
  Output o;
  auto single = [&](const BoundResult& r) {
    o.result = to_json(r);
    o.rows = {bound_header(r), bound_row(name, r)};
    bound_comments(r, o.comments);
  };
  if (name == "levy") {
    const double dim = c.n ? std::exp2(*c.n) : p.dbl("dim");
    single(levy_tail(dim, p.dbl("dev"), p.dbl("lipschitz", 1.0)));
  } else if (name == "haar-concentration") {
    const std::string kind = p.str("kind", "frac");
    if (kind != "frac" && kind != "tv") bad_value("kind", kind, "frac or tv");
    single(haar_concentration(require_n(c),
                              kind == "tv" ? ConcentrationKind::kTv
                                           : ConcentrationKind::kFrac,
                              p.dbl("dev")));
  } else if (name == "haar-query") {
    single(haar_query_bound(bound_params(c, p)));
  } else if (name == "frac") {
    const std::string regime = p.str("regime", "linear");
    FracRegime r = FracRegime::kLinear;
    if (regime == "sublinear") {
      r = FracRegime::kSublinear;
    } else if (regime == "simplified") {
      r = FracRegime::kSublinearSimplified;
    } else if (regime != "linear") {
      bad_value("regime", regime, "linear, sublinear or simplified");
    }
    single(frac_bound(require_n(c), c.d, p.dbl("tau"), r, p.dbl("delta", 1.0)));
  } else if (name == "far-from-uniform") {
    const std::string mode = p.str("mode", "markov");
    if (mode == "markov") {
      single(far_from_uniform_bound(c.n.value_or(2), FarFromUniformMode::kMarkov,
                                    p.dbl("eps")));
    } else if (mode == "eight-design") {
      single(far_from_uniform_bound(require_n(c), FarFromUniformMode::kEightDesign));
    } else if (mode == "four-design") {
      single(far_from_uniform_bound(require_n(c), FarFromUniformMode::kFourDesign,
                                    p.dbl("c")));
    } else {
      bad_value("mode", mode, "markov, four-design or eight-design");
    }
  } else if (name == "generic-query") {
    single(query_bound_generic(p.dbl("beta"), p.dbl("ball"), p.dbl("frac"),
                               p.opt_double("alpha")));
  } else if (name == "linear-query") {
    single(linear_query_bound(bound_params(c, p)));
  } else if (name == "sublinear-query") {
    single(sublinear_query_bound(bound_params(c, p)));
  } else if (name == "far-from-fixed") {
    single(far_from_fixed_bound(require_n(c), p.dbl("eps"), p.opt_double("tau")));
  } else if (name == "design-depth") {
    const double t = p.dbl("t");
    if (t != std::floor(t) || t < 2 || t > 1e6) bad_value("t", p.str("t", ""), "integer >= 2");
    single(design_depth_bound(require_n(c), static_cast<int>(t), p.dbl("eps")));
  } else if (name == "feldman") {
    const FeldmanVariants v =
        feldman_variants(p.dbl("beta"), p.dbl("alpha"), p.dbl("ball"), p.dbl("frac"));
    o.result = {{"alpha_beta", to_json(v.alpha_beta)},
                {"beta_tight", to_json(v.beta_tight)}};
    o.rows = {bound_header(v.alpha_beta), bound_row("alpha-beta", v.alpha_beta),
              bound_row("beta-tight", v.beta_tight)};
  } else {
    throw ConfigError(
        "unknown bound '" + name +
        "' (levy, haar-concentration, haar-query, frac, far-from-uniform, "
        "generic-query, linear-query, sublinear-query, far-from-fixed, "
        "design-depth, feldman)");
  }
  return o;
}

// ---------------------------------------------------------------- simulate

Output run_simulate(const RunConfig& c, std::uint64_t seed) {
  const ParamReader p(c.params);
  const int n = require_n(c);
  const int d = c.d.value_or(0);
  if (d < 0) bad_value("d", std::to_string(d), "depth >= 0");
  const std::string gate = p.str("gate", "haar");
  std::optional<BrickworkCircuit> circuit;
  if (gate == "haar") {
    RngStream rng(seed, hash_name("simulate"));
    circuit.emplace(BrickworkCircuit::random(n, d, rng));
  } else {
    std::optional<TwoQubitGate> g;
    if (gate == "identity") g = TwoQubitGate::identity();
    if (gate == "swap") g = TwoQubitGate::swap();
    if (gate == "cnot") g = TwoQubitGate::cnot();
    if (gate == "bell") g = TwoQubitGate::bell();
    if (!g) bad_value("gate", gate, "haar, identity, swap, cnot or bell");
    circuit.emplace(BrickworkCircuit::uniform_gate(n, d, *g));
  }
  const long long initial = parse_integer("initial", p.str("initial", "0"));
  if (initial < 0 || (n < 63 && initial >= (1LL << n))) {
    bad_value("initial", p.str("initial", "0"), "basis label in [0, 2^n)");
  }
  const BornDistribution dist =
      born_distribution(run_circuit(*circuit, static_cast<std::uint64_t>(initial)));
  Output o;
  o.result = to_json(dist);
  o.rows = {{"x", "bits", "probability"}};
  for (std::size_t x = 0; x < dist.size(); ++x) {
    std::string bits(n, '0');
    for (int q = 0; q < n; ++q) {
      if ((x >> q) & 1u) bits[n - 1 - q] = '1';
    }
    o.rows.push_back({std::to_string(x), bits, num(dist[x])});
  }
  return o;
}

// ---------------------------------------------------------------- estimate

EnsembleSpec ensemble_from(const RunConfig& c, const ParamReader& p,
                           std::uint64_t seed) {
  EnsembleSpec spec;
  try {
    spec.kind = ensemble_kind_from_string(p.str("ensemble", "haar_state"));
  } catch (const PreconditionError&) {
    bad_value("ensemble", p.str("ensemble", ""),
              "haar_state, haar_unitary, brickwork or stabilizer_enum");
  }
  spec.n = require_n(c);
  spec.depth = c.d.value_or(0);
  spec.seed = seed;
  spec.validate();
  return spec;
}

std::string read_file(const std::string& key, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read file for '" + key + "': " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

QueryFunction load_phi(int n, const ParamReader& p, std::uint64_t seed) {
  if (p.has("phi-file")) {
    const std::string text = read_file("phi-file", p.str("phi-file", ""));
    const Json j = Json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_object()) {
      QueryFunction phi = query_from_json(j);
      if (phi.num_qubits() != n) throw ConfigError("phi-file: n does not match --n");
      return phi;
    }
    std::vector<double> table;
    std::stringstream ss(text);
    std::string item;
    while (ss >> item) table.push_back(parse_double("phi-file", item));
    return QueryFunction(n, std::move(table));
  }
  const std::uint64_t phi_seed =
      p.has("phi-seed") ? parse_seed(p.str("phi-seed", "")) : seed;
  RngStream rng(phi_seed, hash_name("phi"));
  std::vector<double> table(std::size_t{1} << n);
  for (double& v : table) v = 2.0 * rng.uniform() - 1.0;
  return QueryFunction(n, std::move(table));
}

Observable observable_from(int n, const ParamReader& p, std::uint64_t seed) {
  const std::string kind = p.str("observable", "tv");
  if (kind == "tv") return Observable::tv_to_uniform();
  if (kind == "functional") return Observable::functional(load_phi(n, p, seed));
  if (kind == "deviation") return Observable::functional_deviation(load_phi(n, p, seed));
  if (kind == "z") return Observable::collision_z();
  if (kind == "x") return Observable::fourth_x();
  if (kind == "monomial") {
    MomentPattern pattern;
    for (long long e : parse_int_list("exponents", p.str("exponents", "2"))) {
      if (e < 1 || e > 64) bad_value("exponents", p.str("exponents", ""), "exponents in [1, 64]");
      pattern.exponents.push_back(static_cast<int>(e));
    }
    if (p.has("points")) {
      for (long long x : parse_int_list("points", p.str("points", ""))) {
        if (x < 0) bad_value("points", p.str("points", ""), "basis labels >= 0");
        pattern.points.push_back(static_cast<std::uint64_t>(x));
      }
    } else {
      for (std::size_t l = 0; l < pattern.exponents.size(); ++l) pattern.points.push_back(l);
    }
    if (pattern.points.size() != pattern.exponents.size()) {
      throw ConfigError("'points' and 'exponents' must have the same length");
    }
    return Observable::monomial(std::move(pattern));
  }
  if (kind == "tv-fixed") {
    if (!p.has("reference-file")) return Observable::tv_to_fixed(BornDistribution::point_mass(n, 0));
    const std::string text = read_file("reference-file", p.str("reference-file", ""));
    const Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("reference-file: not valid JSON");
    return Observable::tv_to_fixed(distribution_from_json(j));
  }
  bad_value("observable", kind, "tv, functional, deviation, z, x, monomial or tv-fixed");
}

Output run_estimate(const RunConfig& c, std::uint64_t seed) {
  const ParamReader p(c.params);
  const EnsembleSpec spec = ensemble_from(c, p, seed);
  const Observable obs = observable_from(spec.n, p, seed);
  obs.check_compatible(spec.n);
  const std::size_t trials = c.trials.value_or(1000);
  const std::string experiment = "estimate/" + spec.name() + "/" + obs.name();
  EstimateResult r;
  if (p.has("threshold")) {
    const bool strict = parse_bool("strict", p.str("strict", "false"));
    r = estimate_tail(spec, obs, p.dbl("threshold"), trials, c.workers, strict, experiment);
  } else {
    r = estimate_expectation(spec, obs, trials, c.workers, experiment);
  }
  if (p.has("samples-csv")) {
    std::ofstream f(p.str("samples-csv", ""));
    if (!f) throw ConfigError("cannot open samples-csv file '" + p.str("samples-csv", "") + "'");
    write_samples_csv(f, r);
  }
  Output o;
  o.result = to_json(r);
  o.rows = {{"experiment", "mean", "stderr", "variance", "trials", "exact"},
            {r.experiment, num(r.mean), num(r.stderr_), num(r.variance),
             std::to_string(r.trials), r.exact ? "true" : "false"}};
  if (r.tail) {
    for (const char* h : {"threshold", "probability", "wilson_lo", "wilson_hi"}) {
      o.rows[0].push_back(h);
    }
    for (double v : {r.tail->threshold, r.tail->probability, r.tail->wilson_lo,
                     r.tail->wilson_hi}) {
      o.rows[1].push_back(num(v));
    }
  }
  o.comments.push_back("elapsed " + num(r.elapsed_seconds) + " s, workers " +
                       std::to_string(r.workers));
  return o;
}

// ---------------------------------------------------------------- census

Output run_census(const RunConfig& c) {
  std::vector<int> ns;
  if (c.n) {
    if (*c.n < 1 || *c.n > 1000) bad_value("n", std::to_string(*c.n), "integer in [1, 1000]");
    ns.push_back(*c.n);
  } else {
    ns = {1, 2, 3};
  }
  Output o;
  o.result = Json::array();
  o.rows = {{"n", "total", "uniform", "ratio", "enumerated", "formula-match"}};
  for (int n : ns) {
    const StabilizerCensus formula = clifford_counts(n);
    Json entry = to_json(formula);
    std::string enumerated = "skipped";
    std::string match = "n/a";
    if (n <= 3) {
      const StabilizerCensus bfs = census_by_enumeration(n);
      const bool ok = bfs.total == formula.total &&
                      bfs.uniform_output == formula.uniform_output;
      enumerated = bfs.total.str() + "/" + bfs.uniform_output.str();
      match = ok ? "true" : "false";
      entry["enumerated_total"] = bfs.total.str();
      entry["enumerated_uniform"] = bfs.uniform_output.str();
      entry["formula_match"] = ok;
      if (!ok) o.exit_code = kExitFailure;
    }
    o.result.push_back(entry);
    o.rows.push_back({std::to_string(n), formula.total.str(),
                      formula.uniform_output.str(),
                      num(static_cast<double>(formula.ratio)), enumerated, match});
  }
  if (!c.n) o.comments.push_back("limit of ratio: " + num(clifford_uniform_ratio_limit()));
  return o;
}

// ---------------------------------------------------------------- design

Output run_design(const RunConfig& c, std::uint64_t seed) {
  const ParamReader p(c.params);
  const EnsembleSpec spec = ensemble_from(c, p, seed);
  const int t = parse_int("t", p.str("t", "2"), 1, 64);
  const DesignDeviationReport r =
      state_design_deviation(spec, t, c.trials.value_or(200), c.workers);
  Output o;
  o.result = to_json(r);
  o.rows = {{"ensemble", "n", "t", "states", "exact", "deviation", "stderr"},
            {spec.name(), std::to_string(r.n), std::to_string(r.t),
             std::to_string(r.trials), r.exact ? "true" : "false",
             num(r.deviation), num(r.stderr_estimate)}};
  return o;
}

// ---------------------------------------------------------------- sq-demo

Output run_sq_demo(const RunConfig& c, std::uint64_t seed) {
  const ParamReader p(c.params);
  const int n = c.n.value_or(2);
  if (n < 1 || n > 3) bad_value("n", std::to_string(n), "integer in [1, 3]");
  const double eps = p.dbl("eps", 0.1);
  const double tau = p.dbl("tau", 0.05);
  const std::string mode_name = p.str("mode", "exact");
  OracleMode mode = OracleMode::kExact;
  if (mode_name == "adversarial") {
    mode = OracleMode::kAdversarial;
  } else if (mode_name == "sampled") {
    mode = OracleMode::kSampled;
  } else if (mode_name != "exact") {
    bad_value("mode", mode_name, "exact, adversarial or sampled");
  }
  const long long m = parse_integer("m", p.str("m", "10000"));
  if (m < 1) bad_value("m", p.str("m", ""), "sample count >= 1");

  const BornDistribution reference = BornDistribution::uniform(n);
  std::vector<BornDistribution> targets;
  for (const Statevector& s : enumerate_stabilizer_states(n)) {
    targets.push_back(born_distribution(s));
  }
  targets.push_back(reference);
  DistributionClass cls;
  std::set<std::vector<double>> seen;
  for (const BornDistribution& t : targets) {
    if (tv_distance(t, reference) <= eps + tau) continue;
    std::vector<double> key;
    for (double v : t.probs()) key.push_back(std::round(v * 1e9) / 1e9);
    if (seen.insert(key).second) cls.members.push_back(t);
  }
  const Learner learner = nearest_member_learner(cls.members);
  const RngStream root(seed, hash_name("sq-demo"));

  Output o;
  o.result = {{"mode", to_string(mode)}, {"eps", eps}, {"tau", tau},
              {"class_size", cls.members.size()}, {"runs", Json::array()}};
  o.rows = {{"target", "tv-to-Q", "truth", "verdict", "queries", "violations", "correct"}};
  std::size_t wrong = 0;
  std::size_t unexcused = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const BornDistribution& target = targets[i];
    SqOracle oracle =
        mode == OracleMode::kExact ? SqOracle::exact(target, tau)
        : mode == OracleMode::kAdversarial
            ? SqOracle::adversarial(target, tau, reference)
            : SqOracle::sampled(target, tau, static_cast<std::size_t>(m),
                                spawn_substream(root, i));
    const DecisionOutcome d = decide_via_learner(learner, cls, reference, eps, tau, oracle);
    const double tv = tv_distance(target, reference);
    const Verdict truth = tv < 1e-9 ? Verdict::kEqualsReference : Verdict::kInClass;
    std::size_t violations = 0;
    for (const auto& e : oracle.log()) violations += e.violated ? 1 : 0;
    const bool correct = d.verdict == truth;
    if (!correct) {
      ++wrong;
      if (violations == 0) ++unexcused;
    }
    Json run = to_json(d);
    run["target"] = i;
    run["truth"] = to_string(truth);
    run["correct"] = correct;
    run["violations"] = violations;
    o.result["runs"].push_back(run);
    o.rows.push_back({std::to_string(i), num(tv), to_string(truth), to_string(d.verdict),
                      std::to_string(d.queries_used), std::to_string(violations),
                      correct ? "true" : "false"});
  }
  o.result["wrong"] = wrong;
  o.result["wrong_without_violation"] = unexcused;
  o.comments.push_back(std::to_string(targets.size() - wrong) + "/" +
                       std::to_string(targets.size()) + " correct verdicts, class size " +
                       std::to_string(cls.members.size()));
  if (mode == OracleMode::kSampled) {
    o.comments.push_back("per-query violation probability <= " +
                         num(2.0 * std::exp(-static_cast<double>(m) * tau * tau / 2.0)));
  }
  if (unexcused > 0) o.exit_code = kExitFailure;
  return o;
}

// ---------------------------------------------------------------- verify-all

int run_verify_all(const RunConfig& c, std::ostream& out) {
  AcceptanceOptions opt;
  if (c.seed) opt.seed = *c.seed;
  opt.workers = c.workers;
  std::vector<int> ids;
  if (c.params.count("only")) {
    ids.push_back(parse_int("only", c.params.at("only"), 1, kAcceptanceCriteria));
  } else {
    for (int id = 1; id <= kAcceptanceCriteria; ++id) ids.push_back(id);
  }
  int passed = 0;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, opt);
    passed += r.passed ? 1 : 0;
    const Json result = {{"id", r.id},         {"title", r.title},
                         {"passed", r.passed}, {"detail", r.detail},
                         {"seconds", r.seconds}, {"data", r.data}};
    const Json record = make_record("verify-all", params_json(c, opt.seed), result, opt.seed);
    append_record(c, record);
    if (c.format == OutputFormat::kJson) {
      out << record.dump() << '\n';
    } else {
      out << format_line(r) << '\n' << std::flush;
    }
  }
  if (c.format != OutputFormat::kJson) {
    out << passed << "/" << ids.size() << " criteria passed\n";
  }
  return passed == static_cast<int>(ids.size()) ? kExitOk : kExitFailure;
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.find('=') == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    out.insert_or_assign(split_assignment(line).first, split_assignment(line).second);
  }
  return out;
}

RunConfig parse_command_line(const std::vector<std::string>& args) {
  CLI::App app{"sqlab: random-circuit Born distributions, bounds and SQ experiments"};
  app.require_subcommand(1, 1);
  std::map<std::string, std::string> flags;
  std::string config_path;
  std::vector<std::string> tokens;
  for (const std::string& name : kSubcommands) {
    CLI::App* sub = app.add_subcommand(name);
    for (const char* f : {"n", "d", "trials", "seed", "workers", "out", "format"}) {
      sub->add_option_function<std::string>(
          std::string("--") + f, [&flags, f](const std::string& v) { flags[f] = v; });
    }
    sub->add_option("--config", config_path, "key = value file");
    sub->add_option("params", tokens, "key=value parameters");
  }
  app.get_subcommand("bounds")->description("evaluate a closed-form bound: bounds <name> key=value...");
  app.get_subcommand("simulate")->description("run one brickwork circuit and print its Born distribution");
  app.get_subcommand("estimate")->description("Monte Carlo estimate of an observable over an ensemble");
  app.get_subcommand("census")->description("stabilizer enumeration against the counting formulas");
  app.get_subcommand("design")->description("trace-norm deviation from a state t-design");
  app.get_subcommand("sq-demo")->description("decide-via-learner over the stabilizer class");
  app.get_subcommand("verify-all")->description("run the acceptance suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    RunConfig help;
    help.subcommand = "help";
    std::string text = app.help();
    for (CLI::App* sub : app.get_subcommands()) text = sub->help();
    help.params["text"] = text;
    return help;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  RunConfig c;
  c.subcommand = app.get_subcommands().front()->get_name();
  Params merged;
  if (!config_path.empty()) merged = read_config_file(config_path);
  for (const std::string& tok : tokens) {
    if (tok.find('=') == std::string::npos) {
      if (c.subcommand == "bounds" && c.bound_name.empty()) {
        c.bound_name = tok;
        continue;
      }
      throw ConfigError("unexpected argument '" + tok + "' (parameters are key=value)");
    }
    const auto [k, v] = split_assignment(tok);
    merged[k] = v;
  }
  for (const auto& [k, v] : flags) merged[k] = v;
  if (c.subcommand == "bounds" && c.bound_name.empty()) {
    if (merged.count("name")) {
      c.bound_name = merged["name"];
      merged.erase("name");
    } else {
      throw ConfigError("bounds: missing bound name");
    }
  }

  const auto& allowed = kSubcommandKeys.at(c.subcommand);
  for (const auto& [k, v] : merged) {
    if (!kCommonKeys.count(k) && !allowed.count(k)) {
      throw ConfigError("unknown parameter '" + k + "' for " + c.subcommand);
    }
  }
  auto take = [&](const char* k) -> std::optional<std::string> {
    const auto it = merged.find(k);
    if (it == merged.end()) return std::nullopt;
    std::string v = it->second;
    merged.erase(it);
    return v;
  };
  if (auto v = take("n")) c.n = parse_int("n", *v, 1, 1000);
  if (auto v = take("d")) c.d = parse_int("d", *v, 0, 100000);
  if (auto v = take("trials")) {
    const long long t = parse_integer("trials", *v);
    if (t < 1) bad_value("trials", *v, "positive integer");
    c.trials = static_cast<std::size_t>(t);
  }
  if (auto v = take("seed")) {
    try {
      c.seed = parse_seed(*v);
    } catch (const PreconditionError&) {
      bad_value("seed", *v, "decimal or 0x-hex 64-bit integer");
    }
  }
  if (auto v = take("workers")) {
    c.workers = parse_int("workers", *v, 1, 1024);
  } else if (const char* env = std::getenv(kWorkersEnv); env && *env) {
    c.workers = parse_int(kWorkersEnv, env, 1, 1024);
  }
  if (auto v = take("out")) c.out = *v;
  c.format = c.subcommand == "simulate" ? OutputFormat::kJson : OutputFormat::kTable;
  if (auto v = take("format")) {
    if (*v == "json") {
      c.format = OutputFormat::kJson;
    } else if (*v == "csv") {
      c.format = OutputFormat::kCsv;
    } else if (*v == "table") {
      c.format = OutputFormat::kTable;
    } else {
      bad_value("format", *v, "json, csv or table");
    }
  }
  c.params = std::move(merged);
  return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.subcommand == "help") {
    out << c.params.at("text");
    return kExitOk;
  }
  if (c.subcommand == "verify-all") return run_verify_all(c, out);
  const std::uint64_t seed = c.seed.value_or(0);
  Output o;
  if (c.subcommand == "bounds") {
    o = run_bounds(c);
  } else if (c.subcommand == "simulate") {
    o = run_simulate(c, seed);
  } else if (c.subcommand == "estimate") {
    o = run_estimate(c, seed);
  } else if (c.subcommand == "census") {
    o = run_census(c);
  } else if (c.subcommand == "design") {
    o = run_design(c, seed);
  } else if (c.subcommand == "sq-demo") {
    o = run_sq_demo(c, seed);
  } else {
    err << "unknown subcommand '" << c.subcommand << "'\n";
    return kExitConfig;
  }
  const std::string command =
      c.bound_name.empty() ? c.subcommand : c.subcommand + " " + c.bound_name;
  const Json record = make_record(command, params_json(c, seed), o.result, seed);
  append_record(c, record);
  if (c.format == OutputFormat::kJson) {
    out << record.dump() << '\n';
  } else {
    print_rows(o, c.format, out);
  }
  return o.exit_code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return run(parse_command_line(args), out, err);
  } catch (const PreconditionError& e) {
    err << "sqlab: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "sqlab: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace sqlab
