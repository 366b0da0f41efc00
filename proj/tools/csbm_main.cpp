#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csbm/harness.hpp"
#include "csbm/kv.hpp"
#include "csbm/map_oracle.hpp"
#include "csbm/matching.hpp"
#include "csbm/model.hpp"
#include "csbm/recovery.hpp"

namespace {

using namespace csbm;

// "lo:hi:step" (inclusive endpoints up to rounding) or comma-separated list.
std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    double lo, hi, step;
    char c1, c2;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
        step <= 0) {
      throw std::runtime_error("bad range: " + text);
    }
    for (double v = lo; v <= hi + 1e-9 * step; v += step) out.push_back(v);
  } else {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) out.push_back(std::stod(item));
    }
  }
  if (out.empty()) throw std::runtime_error("empty value list: " + text);
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

MatcherChoice matcher_from_string(const std::string& name) {
  if (name == "oracle") return MatcherChoice::Oracle;
  if (name == "exact") return MatcherChoice::Exact;
  throw std::runtime_error("unknown matcher: " + name);
}

Matching run_matcher(const LoadedInstance& inst, const std::string& matcher,
                     int k) {
  if (matcher_from_string(matcher) == MatcherChoice::Oracle) {
    return kcore_matching_oracle(inst.pair, k);
  }
  return kcore_matching_exact(inst.pair.g1, inst.pair.g2, k);
}

void write_labeling(const std::string& path, const Labeling& labels) {
  std::ofstream out = open_out(path);
  for (int v : labels) out << (v >= 0 ? "+1" : "-1") << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"correlated SBM exact-recovery laboratory"};
  app.require_subcommand(1);

  // classify
  double c_alpha, c_beta, c_s, c_tol = 1e-9;
  auto* classify = app.add_subcommand("classify", "region of (alpha, beta, s)");
  classify->add_option("alpha", c_alpha)->required();
  classify->add_option("beta", c_beta)->required();
  classify->add_option("s", c_s)->required();
  classify->add_option("--tol", c_tol);

  // generate
  int g_n;
  double g_alpha, g_beta, g_s;
  std::uint64_t g_seed = 0;
  std::string g_generator = "subsampling", g_out;
  auto* generate = app.add_subcommand("generate", "sample an instance directory");
  generate->add_option("--n", g_n)->required();
  generate->add_option("--alpha", g_alpha)->required();
  generate->add_option("--beta", g_beta)->required();
  generate->add_option("--s", g_s)->required();
  generate->add_option("--seed", g_seed);
  generate->add_option("--generator", g_generator)
      ->check(CLI::IsMember({"subsampling", "partition"}));
  generate->add_option("--out", g_out)->required();

  // match
  std::string m_instance, m_matcher = "oracle", m_out;
  int m_k = 13;
  auto* match = app.add_subcommand("match", "k-core matching of an instance");
  match->add_option("--instance", m_instance)->required();
  match->add_option("--k", m_k);
  match->add_option("--matcher", m_matcher);
  match->add_option("--out", m_out)->required();

  // recover
  std::string r_instance, r_matcher = "oracle", r_out, r_config, r_eps = "auto";
  int r_k = 13;
  std::uint64_t r_seed = 0;
  auto* recover = app.add_subcommand("recover", "full recovery pipeline");
  recover->add_option("--instance", r_instance)->required();
  recover->add_option("--config", r_config, "key-value config file");
  recover->add_option("--eps", r_eps, "positive value or 'auto'");
  recover->add_option("--k", r_k);
  recover->add_option("--seed", r_seed);
  recover->add_option("--matcher", r_matcher);
  recover->add_option("--out", r_out)->required();

  // map-witness
  std::string w_instance, w_out;
  auto* witness = app.add_subcommand("map-witness", "MAP failure witness row");
  witness->add_option("--instance", w_instance)->required();
  witness->add_option("--out", w_out)->required();

  // sweep
  std::string s_spec, s_out;
  auto* sweep = app.add_subcommand("sweep", "parameter-grid Monte Carlo sweep");
  sweep->add_option("--spec", s_spec)->required();
  sweep->add_option("--out", s_out)->required();

  CLI11_PARSE(app, argc, argv);

  if (classify->parsed()) {
    std::cout << to_string(classify_region(c_alpha, c_beta, c_s, c_tol))
              << "\n";
    return 0;
  }

  if (generate->parsed()) {
    const ModelParams params(g_n, g_alpha, g_beta, g_s);
    const CorrelatedPair pair = g_generator == "partition"
                                    ? generate_partition(params, g_seed)
                                    : generate_subsampling(params, g_seed);
    save_instance(g_out, pair, params, g_seed, g_generator);
    std::cout << "instance written to " << g_out << "\n";
    return 0;
  }

  if (match->parsed()) {
    const LoadedInstance inst = load_instance(m_instance);
    const Matching m = run_matcher(inst, m_matcher, m_k);
    std::ofstream out = open_out(m_out);
    write_matching(out, m);
    std::cout << "matched=" << m.size()
              << " deficit=" << inst.params.n - m.size()
              << " f=" << f_statistic(m, inst.pair.g1, inst.pair.g2,
                                      inst.pair.pi_star)
              << "\n";
    return 0;
  }

  if (recover->parsed()) {
    const LoadedInstance inst = load_instance(r_instance);
    double alpha = inst.params.alpha, beta = inst.params.beta,
           s = inst.params.s;
    if (!r_config.empty()) {
      const KvRecord kv = read_kv_file(r_config);
      alpha = std::stod(kv_get_or(kv, "alpha", std::to_string(alpha)));
      beta = std::stod(kv_get_or(kv, "beta", std::to_string(beta)));
      s = std::stod(kv_get_or(kv, "s", std::to_string(s)));
      r_eps = kv_get_or(kv, "eps", r_eps);
      r_k = std::stoi(kv_get_or(kv, "k", std::to_string(r_k)));
      r_seed = std::stoull(kv_get_or(kv, "seed", std::to_string(r_seed)));
    }
    double eps;
    if (r_eps == "auto") {
      const ModelParams params(inst.params.n, alpha, beta, s);
      eps = default_eps(params, nullptr);
    } else {
      eps = std::stod(r_eps);
    }
    const RecoveryConfig cfg(alpha, beta, s, eps, r_k);
    const RecoveryResult res =
        full_recovery(inst.pair.g1, inst.pair.g2, &inst.pair.pi_star, cfg,
                      r_seed, matcher_from_string(r_matcher));
    write_labeling(r_out, res.labels);
    std::cout << "overlap=" << overlap(res.labels, inst.pair.sigma_star)
              << " matched=" << res.matched_size << " deficit=" << res.deficit
              << " expanded=" << res.expanded_deficit << "\n";
    return 0;
  }

  if (witness->parsed()) {
    const LoadedInstance inst = load_instance(w_instance);
    const MapContext ctx = build_map_context(inst.pair);
    const auto [w_plus, w_minus] = witness_counts(ctx);
    const auto pair =
        map_failure_witness(ctx, inst.params.alpha, inst.params.beta);
    std::ofstream out = open_out(w_out);
    out << "# csbm witness csv v1\n";
    out << "seed,n,alpha,beta,s,r_size,s_size,w_plus,w_minus,witness_found\n";
    out << inst.seed << "," << inst.params.n << "," << inst.params.alpha << ","
        << inst.params.beta << "," << inst.params.s << ","
        << ctx.r_star.size() << "," << ctx.s_star.size() << "," << w_plus
        << "," << w_minus << "," << (pair.has_value() ? 1 : 0) << "\n";
    std::cout << "witness_found=" << (pair.has_value() ? 1 : 0) << "\n";
    return 0;
  }

  // sweep
  const KvRecord kv = read_kv_file(s_spec);
  SweepSpec spec;
  spec.alphas = parse_values(kv_get(kv, "alphas"));
  spec.betas = parse_values(kv_get(kv, "betas"));
  spec.ss = parse_values(kv_get(kv, "ss"));
  spec.n = std::stoi(kv_get(kv, "n"));
  spec.trials = std::stoi(kv_get(kv, "trials"));
  spec.base_seed = std::stoull(kv_get_or(kv, "seed", "0"));
  spec.pipeline = pipeline_from_string(kv_get_or(kv, "pipeline", "recover"));
  spec.k = std::stoi(kv_get_or(kv, "k", "13"));
  std::ofstream out = open_out(s_out);
  run_sweep(spec, out);
  std::cout << "sweep written to " << s_out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
