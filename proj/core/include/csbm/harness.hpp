#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "csbm/model.hpp"
#include "csbm/recovery.hpp"

namespace csbm {

enum class Pipeline { Recover, MapWitness, MatchOnly };

Pipeline pipeline_from_string(const std::string& name);
const char* to_string(Pipeline p);

struct WitnessRecord {
  long long r_size = 0;
  long long s_size = 0;
  long long w_plus = 0;
  long long w_minus = 0;
  bool witness_found = false;
};

struct TrialResult {
  std::uint64_t seed = 0;
  int n = 0;
  double alpha = 0, beta = 0, s = 0;
  int k = 0;
  double eps = 0;
  bool eps_fallback = false;
  int matched_size = 0;
  int deficit = 0;
  int expanded_deficit = 0;
  double overlap = 0;
  bool exact = false;  // overlap == 1
  double generate_seconds = 0;
  double pipeline_seconds = 0;
  std::string status = "ok";
  std::optional<WitnessRecord> witness;
};

struct TrialConfig {
  Pipeline pipeline = Pipeline::Recover;
  int k = 13;
  std::optional<double> eps;  // defaults per default_eps
  MatcherChoice matcher = MatcherChoice::Oracle;
};

// eps_feasible when it exists; otherwise the flagged fallback
// max(0.01 * s * D+ / max(|log(alpha/beta)|, 1), 0.01).
double default_eps(const ModelParams& params, bool* fallback);

// generate -> match -> recover/witness -> score; deterministic per seed.
// Stage errors land in `status` instead of propagating.
TrialResult run_trial(const ModelParams& params, const TrialConfig& cfg,
                      std::uint64_t seed);

struct SweepSpec {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<double> ss;
  int n = 0;
  int trials = 1;
  std::uint64_t base_seed = 0;
  Pipeline pipeline = Pipeline::Recover;
  int k = 13;
};

// One aggregate CSV row per grid cell, emitted in (s, beta, alpha) order.
// Byte-identical output for identical specs.
void run_sweep(const SweepSpec& spec, std::ostream& out);

}  // namespace csbm
