#include "csbm/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "csbm/map_oracle.hpp"
#include "csbm/matching.hpp"
#include "csbm/rng.hpp"

namespace csbm {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_fixed(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

}  // namespace

Pipeline pipeline_from_string(const std::string& name) {
  if (name == "recover") return Pipeline::Recover;
  if (name == "map-witness") return Pipeline::MapWitness;
  if (name == "match-only") return Pipeline::MatchOnly;
  throw std::invalid_argument("unknown pipeline: " + name);
}

const char* to_string(Pipeline p) {
  switch (p) {
    case Pipeline::Recover: return "recover";
    case Pipeline::MapWitness: return "map-witness";
    case Pipeline::MatchOnly: return "match-only";
  }
  return "?";
}

double default_eps(const ModelParams& params, bool* fallback) {
  if (const auto eps = eps_feasible(params.alpha, params.beta, params.s)) {
    if (fallback) *fallback = false;
    return *eps;
  }
  if (fallback) *fallback = true;
  double ratio_log = 1.0;
  if (params.alpha > 0 && params.beta > 0) {
    ratio_log = std::max(std::abs(std::log(params.alpha / params.beta)), 1.0);
  }
  const double dch = chernoff_hellinger(params.alpha, params.beta);
  return std::max(0.01 * params.s * dch / ratio_log, 0.01);
}

TrialResult run_trial(const ModelParams& params, const TrialConfig& cfg,
                      std::uint64_t seed) {
  TrialResult r;
  r.seed = seed;
  r.n = params.n;
  r.alpha = params.alpha;
  r.beta = params.beta;
  r.s = params.s;
  r.k = cfg.k;
  bool fb = false;
  r.eps = cfg.eps ? *cfg.eps : default_eps(params, &fb);
  r.eps_fallback = !cfg.eps && fb;

  try {
    auto t0 = std::chrono::steady_clock::now();
    const CorrelatedPair pair = generate_subsampling(params, seed);
    r.generate_seconds = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    switch (cfg.pipeline) {
      case Pipeline::MatchOnly: {
        const Matching m = cfg.matcher == MatcherChoice::Oracle
                               ? kcore_matching_oracle(pair, cfg.k)
                               : kcore_matching_exact(pair.g1, pair.g2, cfg.k);
        r.matched_size = m.size();
        r.deficit = params.n - m.size();
        r.expanded_deficit = r.deficit;
        break;
      }
      case Pipeline::Recover: {
        const RecoveryConfig rc(params.alpha, params.beta, params.s, r.eps,
                                cfg.k);
        const RecoveryResult res = full_recovery(
            pair.g1, pair.g2, &pair.pi_star, rc, seed, cfg.matcher);
        r.matched_size = res.matched_size;
        r.deficit = res.deficit;
        r.expanded_deficit = res.expanded_deficit;
        r.overlap = overlap(res.labels, pair.sigma_star);
        r.exact = r.overlap == 1.0;
        break;
      }
      case Pipeline::MapWitness: {
        const MapContext ctx = build_map_context(pair);
        const auto [w_plus, w_minus] = witness_counts(ctx);
        const auto witness =
            map_failure_witness(ctx, params.alpha, params.beta);
        r.witness = WitnessRecord{
            static_cast<long long>(ctx.r_star.size()),
            static_cast<long long>(ctx.s_star.size()),
            w_plus, w_minus, witness.has_value()};
        const Labeling est = map_estimate(ctx, params.alpha, params.beta);
        r.overlap = overlap(est, pair.sigma_star);
        r.exact = r.overlap == 1.0;
        break;
      }
    }
    r.pipeline_seconds = seconds_since(t0);
  } catch (const std::exception& e) {
    r.status = e.what();
  }
  return r;
}

void run_sweep(const SweepSpec& spec, std::ostream& out) {
  if (spec.alphas.empty() || spec.betas.empty() || spec.ss.empty()) {
    throw std::invalid_argument("run_sweep: empty grid");
  }
  if (spec.trials < 1) throw std::invalid_argument("run_sweep: trials must be >= 1");

  out << "# csbm sweep csv v1\n";
  out << "alpha,beta,s,n,trials,success_rate,mean_overlap,mean_deficit,"
         "region,status\n";

  std::uint64_t cell = 0;
  for (double s : spec.ss) {
    for (double beta : spec.betas) {
      for (double alpha : spec.alphas) {
        TrialConfig cfg;
        cfg.pipeline = spec.pipeline;
        cfg.k = spec.k;

        int successes = 0;
        double overlap_sum = 0, deficit_sum = 0;
        std::string status = "ok";
        for (int t = 0; t < spec.trials; ++t) {
          const std::uint64_t seed =
              rng::draw(spec.base_seed, rng::kTrialSeed, cell,
                        static_cast<std::uint64_t>(t));
          TrialResult tr;
          try {
            const ModelParams params(spec.n, alpha, beta, s);
            tr = run_trial(params, cfg, seed);
          } catch (const std::exception& e) {
            tr.status = e.what();
          }
          if (tr.status != "ok" && status == "ok") status = sanitize(tr.status);
          successes += tr.exact ? 1 : 0;
          overlap_sum += tr.overlap;
          deficit_sum += tr.deficit;
        }
        ++cell;

        out << fmt(alpha) << "," << fmt(beta) << "," << fmt(s) << ","
            << spec.n << "," << spec.trials << ","
            << fmt_fixed(static_cast<double>(successes) / spec.trials) << ","
            << fmt_fixed(overlap_sum / spec.trials) << ","
            << fmt_fixed(deficit_sum / spec.trials) << ","
            << to_string(classify_region(alpha, beta, s)) << ","
            << status << "\n";
      }
    }
  }
}

}  // namespace csbm
