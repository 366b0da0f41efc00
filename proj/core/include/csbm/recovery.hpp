#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "csbm/graph.hpp"
#include "csbm/model.hpp"

namespace csbm {

struct RecoveryConfig {
  double alpha;
  double beta;
  double s;
  double eps;
  int k = 13;

  RecoveryConfig(double alpha, double beta, double s, double eps, int k = 13);
};

// Smallest integer m with (log(eps*m/(200*max{1,alpha,beta})) - 1)*eps/2 > 1.
// Values far beyond any usable n are clamped; all parts are singletons there
// either way.
long long choose_m(double eps, double alpha, double beta);

// Sign split of the leading eigenvector of the degree-centered adjacency
// (power iteration, deterministic start, 200-iteration cap, 1e-8 tolerance).
// Ties land in the first set; sign = -1 swaps the sides.
std::pair<VertexSet, VertexSet> spectral_partition(const Graph& g,
                                                   int sign = +1);

// Holdout-corrected almost-exact recovery: global spectral partition, m-fold
// random holdouts with alignment flips, held-out vertices classified by
// neighborhood majority (alpha > beta) or minority (alpha < beta).
Labeling mns_almost_exact(const Graph& g, double alpha, double beta,
                          double eps, std::uint64_t seed);

// |N(v) ∩ V^{sigma(v)}| - |N(v) ∩ V^{-sigma(v)}|.
int maj_g(const Graph& g, int v, const Labeling& sigma_star);

// Vertices with weak (sign-adjusted) true-label majority or degree at least
// 100*max{1,gamma}*log n. Rejects alpha == beta.
VertexSet i_epsilon_set(const Graph& g, const Labeling& sigma_star, double eps,
                        double alpha, double beta);

// Default eps satisfying both clauses of the feasibility condition, or
// nullopt when no positive eps exists.
std::optional<double> eps_feasible(double alpha, double beta, double s);

struct KcoreLabelResult {
  Labeling labels;   // defined exactly on M
  VertexSet f;       // [n] \ M
  VertexSet f_bar;   // expanded deficit, f_bar ⊇ f
};

// Labels the k-core matching: almost-exact labels on G1 at rates (s*alpha,
// s*beta), Luczak expansion of the deficit through G2, union-graph majority
// on [n] \ F̄, difference-graph majority on F̄ \ F.
KcoreLabelResult label_kcore(const Graph& g1, const Graph& g2,
                             const Matching& m, const RecoveryConfig& cfg,
                             std::uint64_t seed);

enum class MatcherChoice { Oracle, Exact };

struct RecoveryResult {
  Labeling labels;  // total
  int matched_size = 0;
  int deficit = 0;           // |F|
  int expanded_deficit = 0;  // |F̄|
};

// Full pipeline: match, label the core, classify the rest by G1-majority
// against the core labels. The oracle matcher needs pi_star.
RecoveryResult full_recovery(const Graph& g1, const Graph& g2,
                             const std::vector<int>* pi_star,
                             const RecoveryConfig& cfg, std::uint64_t seed,
                             MatcherChoice matcher = MatcherChoice::Oracle);

}  // namespace csbm
