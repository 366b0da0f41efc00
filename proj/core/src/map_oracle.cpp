#include "csbm/map_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace csbm {

VertexSet singleton_set(const std::vector<int>& pi, const Graph& g1,
                        const Graph& g2) {
  const int n = g1.size();
  VertexSet out;
  for (int i = 0; i < n; ++i) {
    bool singleton = true;
    for (int j : g1.neighbors(i)) {
      if (g2.has_edge(pi[i], pi[j])) {
        singleton = false;
        break;
      }
    }
    if (singleton) out.push_back(i);
  }
  return out;
}

std::pair<VertexSet, VertexSet> pruned_set(const std::vector<int>& pi,
                                           const Graph& g1, const Graph& g2) {
  const int n = g1.size();
  const VertexSet r = singleton_set(pi, g1, g2);

  std::vector<int> pi_inv(n);
  for (int i = 0; i < n; ++i) pi_inv[pi[i]] = i;

  std::vector<char> in_rbar(n, 0);
  for (int i : r) in_rbar[i] = 1;
  for (int i : r) {
    for (int w : g2.neighbors(pi[i])) in_rbar[pi_inv[w]] = 1;
  }
  VertexSet r_bar;
  for (int v = 0; v < n; ++v) {
    if (in_rbar[v]) r_bar.push_back(v);
  }

  VertexSet s;
  for (int i : r) {
    bool clean = true;
    for (int j : g1.neighbors(i)) {
      if (in_rbar[j]) {
        clean = false;
        break;
      }
    }
    if (clean) s.push_back(i);
  }
  return {std::move(s), std::move(r_bar)};
}

std::vector<int> maj_values(const Graph& g1, const Labeling& sigma_star) {
  const int n = g1.size();
  std::vector<int> maj(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j : g1.neighbors(i)) maj[i] += sigma_star[j];
  }
  return maj;
}

MapContext build_map_context(const CorrelatedPair& pair) {
  MapContext ctx;
  ctx.r_star = singleton_set(pair.pi_star, pair.g1, pair.g2);
  auto [s, r_bar] = pruned_set(pair.pi_star, pair.g1, pair.g2);
  ctx.s_star = std::move(s);
  ctx.r_bar = std::move(r_bar);
  ctx.maj = maj_values(pair.g1, pair.sigma_star);
  ctx.sigma_star = pair.sigma_star;
  return ctx;
}

Labeling map_estimate(const MapContext& ctx, double alpha, double beta) {
  if (alpha == beta) {
    throw std::invalid_argument("map_estimate: direction undefined for alpha == beta");
  }
  Labeling out = ctx.sigma_star;  // genie labels outside S

  std::size_t plus_quota = 0;
  for (int i : ctx.s_star) {
    if (ctx.sigma_star[i] == 1) ++plus_quota;
  }
  VertexSet order = ctx.s_star;
  const bool largest_first = alpha > beta;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ctx.maj[a] != ctx.maj[b]) {
      return largest_first ? ctx.maj[a] > ctx.maj[b] : ctx.maj[a] < ctx.maj[b];
    }
    return a < b;
  });
  for (std::size_t t = 0; t < order.size(); ++t) {
    out[order[t]] = t < plus_quota ? 1 : -1;
  }
  return out;
}

std::optional<std::pair<int, int>> map_failure_witness(const MapContext& ctx,
                                                       double alpha,
                                                       double beta) {
  if (alpha == beta) {
    throw std::invalid_argument("map_failure_witness: alpha == beta");
  }
  const bool majority = alpha > beta;
  // s_star is ascending, so the first qualifying (i, j) is lexicographically
  // smallest.
  for (int i : ctx.s_star) {
    if (ctx.sigma_star[i] != 1) continue;
    for (int j : ctx.s_star) {
      if (ctx.sigma_star[j] != -1) continue;
      const bool fails = majority ? ctx.maj[i] < ctx.maj[j]
                                  : ctx.maj[i] > ctx.maj[j];
      if (fails) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::pair<long long, long long> witness_counts(const MapContext& ctx) {
  long long w_plus = 0, w_minus = 0;
  for (int i : ctx.s_star) {
    if (ctx.sigma_star[i] == 1 && ctx.maj[i] < 0) ++w_plus;
    if (ctx.sigma_star[i] == -1 && ctx.maj[i] > 0) ++w_minus;
  }
  return {w_plus, w_minus};
}

}  // namespace csbm
