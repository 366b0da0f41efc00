#include "csbm/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "csbm/luczak.hpp"
#include "csbm/matching.hpp"
#include "csbm/rng.hpp"

namespace csbm {

namespace {

constexpr int kPowerIterCap = 200;
constexpr double kPowerIterTol = 1e-8;
constexpr long long kChooseMClamp = 1LL << 62;

int vote_label(long long vote, bool majority) {
  // Ties go to +1 under either direction.
  const int maj = vote > 0 ? 1 : vote < 0 ? -1 : 1;
  if (majority) return maj;
  return vote == 0 ? 1 : -maj;
}

// Leading eigenvector of A - (mean_deg/n')J restricted to the alive set,
// by power iteration. Dead entries of x are pinned at zero, so the plain
// adjacency product already realizes the masked operator. A warm start
// (e.g. the full-graph eigenvector when one vertex is held out) cuts the
// iteration count sharply without changing the fixed point. When the top of
// the spectrum has no usable gap (e.g. alpha = beta) the residual plateaus
// instead of converging; a stagnation exit then stops the loop early --
// deterministically -- rather than burning the full cap on noise.
std::vector<double> leading_eigenvector(const Graph& g,
                                        const std::vector<char>& alive,
                                        int n_alive, long long edges_alive,
                                        const std::vector<double>* warm_start) {
  const int n = g.size();
  std::vector<double> x(n, 0.0);
  if (n_alive == 0) return x;
  if (warm_start) {
    for (int v = 0; v < n; ++v) {
      if (alive[v]) x[v] = (*warm_start)[v];
    }
  } else {
    for (int v = 0; v < n; ++v) {
      if (alive[v]) x[v] = 2 * rng::uniform(0, rng::kSpectralStart, v) - 1;
    }
  }
  double norm = 0;
  for (int v = 0; v < n; ++v) norm += x[v] * x[v];
  if (norm < 1e-300) {
    for (int v = 0; v < n; ++v) {
      if (alive[v]) { x[v] = 1; break; }
    }
    norm = 1;
  }
  norm = std::sqrt(norm);
  for (int v = 0; v < n; ++v) x[v] /= norm;

  const double mean_deg = 2.0 * static_cast<double>(edges_alive) / n_alive;
  const double shift = mean_deg / n_alive;

  constexpr int kStagnationFloor = 30;   // iterations before the exit arms
  constexpr int kStagnationLag = 10;     // improvement window
  double past_delta[kStagnationLag];

  std::vector<double> y(n, 0.0);
  for (int iter = 0; iter < kPowerIterCap; ++iter) {
    double sum = 0;
    for (int v = 0; v < n; ++v) sum += x[v];
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      double acc = 0;
      for (int u : g.neighbors(v)) acc += x[u];  // x is zero off alive
      y[v] = acc - shift * sum;
    }
    double ynorm = 0, dot = 0;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      ynorm += y[v] * y[v];
      dot += y[v] * x[v];
    }
    if (ynorm < 1e-300) break;  // operator annihilated x; keep the start split
    ynorm = std::sqrt(ynorm);
    const double sign = dot >= 0 ? 1.0 : -1.0;
    double delta = 0;
    for (int v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      const double yn = y[v] / ynorm;
      const double d = yn - sign * x[v];
      delta += d * d;
      x[v] = yn;
    }
    delta = std::sqrt(delta);
    if (delta <= kPowerIterTol) break;
    if (iter >= kStagnationFloor &&
        delta > 0.5 * past_delta[iter % kStagnationLag]) {
      break;  // less than 2x residual improvement over the last 10 steps
    }
    past_delta[iter % kStagnationLag] = delta;
  }
  return x;
}

}  // namespace

RecoveryConfig::RecoveryConfig(double alpha_, double beta_, double s_,
                               double eps_, int k_)
    : alpha(alpha_), beta(beta_), s(s_), eps(eps_), k(k_) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("RecoveryConfig: negative rate");
  if (s < 0 || s > 1) throw std::invalid_argument("RecoveryConfig: s outside [0,1]");
  if (eps <= 0) throw std::invalid_argument("RecoveryConfig: eps must be positive");
  if (k < 1) throw std::invalid_argument("RecoveryConfig: k must be >= 1");
}

long long choose_m(double eps, double alpha, double beta) {
  if (eps <= 0) throw std::invalid_argument("choose_m: eps must be positive");
  const double scale = 200.0 * std::max({1.0, alpha, beta});
  const auto satisfied = [&](double m) {
    return (std::log(eps * m / scale) - 1.0) * eps / 2.0 > 1.0;
  };
  const double log_m = std::log(scale / eps) + 1.0 + 2.0 / eps;
  if (log_m > 42.0) return kChooseMClamp;  // every realistic n gets singleton parts
  long long m = static_cast<long long>(std::ceil(std::exp(log_m)));
  while (!satisfied(static_cast<double>(m))) ++m;
  return m;
}

std::pair<VertexSet, VertexSet> spectral_partition(const Graph& g, int sign) {
  const int n = g.size();
  std::vector<char> alive(n, 1);
  const std::vector<double> vec =
      leading_eigenvector(g, alive, n, g.edge_count(), nullptr);
  VertexSet plus, minus;
  for (int v = 0; v < n; ++v) {
    ((vec[v] >= 0) == (sign >= 0) ? plus : minus).push_back(v);
  }
  return {std::move(plus), std::move(minus)};
}

Labeling mns_almost_exact(const Graph& g, double alpha, double beta,
                          double eps, std::uint64_t seed) {
  const int n = g.size();
  const long long m = choose_m(eps, alpha, beta);
  const bool majority = alpha >= beta;
  const long long total_edges = g.edge_count();

  std::vector<char> all_alive(n, 1);
  const std::vector<double> global_vec =
      leading_eigenvector(g, all_alive, n, total_edges, nullptr);
  std::vector<char> global_plus(n, 0);
  for (int v = 0; v < n; ++v) global_plus[v] = global_vec[v] >= 0;

  // Random m-fold partition; only nonempty parts matter, visited in
  // ascending part-id order.
  rng::Stream part_stream(seed, rng::kMnsPartition);
  std::map<long long, VertexSet> parts;
  for (int v = 0; v < n; ++v) {
    parts[static_cast<long long>(part_stream.next_below(m))].push_back(v);
  }

  Labeling labels(n, 0);
  std::vector<char> alive(n, 1);
  std::vector<char> in_part(n, 0);
  for (const auto& [part_id, part] : parts) {
    long long part_degree = 0, inner_edges = 0;
    for (int v : part) {
      alive[v] = 0;
      in_part[v] = 1;
      part_degree += g.degree(v);
    }
    for (int v : part) {
      for (int u : g.neighbors(v)) {
        if (u > v && in_part[u]) ++inner_edges;
      }
    }
    const int n_alive = n - static_cast<int>(part.size());
    const long long edges_alive = total_edges - part_degree + inner_edges;

    const std::vector<double> vec =
        leading_eigenvector(g, alive, n_alive, edges_alive, &global_vec);

    // Align the holdout split with the global one.
    int diff = 0;
    for (int v = 0; v < n; ++v) {
      const bool in_plus = alive[v] && vec[v] >= 0;
      if (in_plus != static_cast<bool>(global_plus[v])) ++diff;
    }
    const bool flip = 2 * diff >= n;

    for (int v : part) {
      long long vote = 0;
      for (int u : g.neighbors(v)) {
        if (!alive[u]) continue;
        const bool plus = (vec[u] >= 0) != flip;
        vote += plus ? 1 : -1;
      }
      labels[v] = vote_label(vote, majority);
    }
    for (int v : part) {
      alive[v] = 1;
      in_part[v] = 0;
    }
  }
  return labels;
}

int maj_g(const Graph& g, int v, const Labeling& sigma_star) {
  int maj = 0;
  for (int u : g.neighbors(v)) maj += sigma_star[u];
  return sigma_star[v] * maj;
}

VertexSet i_epsilon_set(const Graph& g, const Labeling& sigma_star, double eps,
                        double alpha, double beta) {
  if (alpha == beta) {
    throw std::invalid_argument("i_epsilon_set: sign convention undefined for alpha == beta");
  }
  const int n = g.size();
  const double gamma = std::max(alpha, beta);
  const double maj_cap = eps * std::log(n);
  const double degree_cap = 100.0 * std::max(1.0, gamma) * std::log(n);
  VertexSet out;
  for (int v = 0; v < n; ++v) {
    const int adjusted = alpha > beta ? maj_g(g, v, sigma_star)
                                      : -maj_g(g, v, sigma_star);
    if (adjusted <= maj_cap || g.degree(v) >= degree_cap) out.push_back(v);
  }
  return out;
}

std::optional<double> eps_feasible(double alpha, double beta, double s) {
  if (alpha == beta || alpha <= 0 || beta <= 0) return std::nullopt;
  const double ratio_log = std::abs(std::log(alpha / beta));
  const double dch = chernoff_hellinger(alpha, beta);
  const double e1 = s * dch / (4 * ratio_log);
  const double e2 = ((1 - (1 - s) * (1 - s)) * dch - 1) / (4 * ratio_log);
  const double eps = std::min(e1, e2);
  if (!(eps > 0)) return std::nullopt;
  return eps;
}

KcoreLabelResult label_kcore(const Graph& g1, const Graph& g2,
                             const Matching& m, const RecoveryConfig& cfg,
                             std::uint64_t seed) {
  const int n = g1.size();
  if (g2.size() != n || m.domain_size() != n) {
    throw std::invalid_argument("label_kcore: size mismatch");
  }
  if (!is_kcore_matching(m, g1, g2, cfg.k)) {
    throw std::invalid_argument("label_kcore: matching is not a k-core matching");
  }
  const bool majority = cfg.alpha >= cfg.beta;

  const Labeling sigma1 = mns_almost_exact(
      g1, cfg.s * cfg.alpha, cfg.s * cfg.beta, cfg.eps,
      rng::draw(seed, rng::kStageMns, 0));

  // F = [n] \ M, expanded through G2 into F'; F̄ pulls F' back through mu.
  KcoreLabelResult result;
  std::vector<char> matched(n, 0);
  for (int i = 0; i < n; ++i) {
    if (m.contains(i)) matched[i] = 1;
    else result.f.push_back(i);
  }
  VertexSet unmatched_images;
  {
    std::vector<char> image_used(n, 0);
    for (int i = 0; i < n; ++i) {
      if (m.contains(i)) image_used[m.image_of(i)] = 1;
    }
    for (int v = 0; v < n; ++v) {
      if (!image_used[v]) unmatched_images.push_back(v);
    }
  }
  const VertexSet f_prime = luczak_expand(g2, unmatched_images);
  std::vector<char> in_fp(n, 0);
  for (int v : f_prime) in_fp[v] = 1;
  std::vector<char> in_fbar(n, 0);
  for (int i = 0; i < n; ++i) {
    in_fbar[i] = !matched[i] || in_fp[m.image_of(i)];
    if (in_fbar[i]) result.f_bar.push_back(i);
  }

  std::vector<char> inside(n, 0);  // [n] \ F̄, all matched
  for (int i = 0; i < n; ++i) inside[i] = !in_fbar[i];

  result.labels.assign(n, 0);
  const Graph g_union = union_graph(g1, g2, m);
  for (int i = 0; i < n; ++i) {
    if (!inside[i]) continue;
    long long vote = 0;
    for (int j : g_union.neighbors(i)) {
      if (inside[j]) vote += sigma1[j];
    }
    result.labels[i] = vote_label(vote, majority);
  }

  // F̄ \ F votes against the frozen inside labels only, so the order of this
  // loop cannot cascade.
  const Graph g_diff = difference_graph(g1, g2, m);
  for (int i = 0; i < n; ++i) {
    if (!in_fbar[i] || !matched[i]) continue;
    long long vote = 0;
    for (int j : g_diff.neighbors(i)) {
      if (inside[j]) vote += result.labels[j];
    }
    result.labels[i] = vote_label(vote, majority);
  }
  return result;
}

RecoveryResult full_recovery(const Graph& g1, const Graph& g2,
                             const std::vector<int>* pi_star,
                             const RecoveryConfig& cfg, std::uint64_t seed,
                             MatcherChoice matcher) {
  const int n = g1.size();
  Matching m(n);
  if (matcher == MatcherChoice::Oracle) {
    if (pi_star == nullptr) {
      throw std::invalid_argument("full_recovery: oracle matcher needs pi_star");
    }
    const Matching truth = Matching::from_permutation(*pi_star);
    const Graph inter = intersection_graph(g1, g2, truth);
    m = Matching::restriction(*pi_star, k_core(inter, cfg.k));
  } else {
    m = kcore_matching_exact(g1, g2, cfg.k);
  }

  const KcoreLabelResult core = label_kcore(g1, g2, m, cfg, seed);
  const bool majority = cfg.alpha >= cfg.beta;

  RecoveryResult result;
  result.labels = core.labels;
  result.matched_size = m.size();
  result.deficit = static_cast<int>(core.f.size());
  result.expanded_deficit = static_cast<int>(core.f_bar.size());
  for (int i : core.f) {
    long long vote = 0;
    for (int j : g1.neighbors(i)) {
      if (m.contains(j)) vote += core.labels[j];
    }
    result.labels[i] = vote_label(vote, majority);
  }
  return result;
}

}  // namespace csbm
