#include <algorithm>

#include "csbm/map_oracle.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace csbm;
using test::make_graph;

namespace {

std::vector<int> identity_perm(int n) {
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i;
  return pi;
}

}  // namespace

TEST_CASE("singleton_set") {
  const Graph empty4(4);
  const Graph k4 =
      make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(singleton_set(identity_perm(4), empty4, k4) == VertexSet{0, 1, 2, 3});

  const Graph triangle = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(singleton_set(identity_perm(3), triangle, triangle).empty());

  const Graph g1 = make_graph(3, {{0, 1}, {1, 2}});
  const Graph g2 = make_graph(3, {{0, 1}});
  CHECK(singleton_set(identity_perm(3), g1, g2) == VertexSet{2});
}

TEST_CASE("pruned_set") {
  const Graph empty4(4);
  {
    const auto [s, r_bar] = pruned_set(identity_perm(4), empty4, empty4);
    CHECK(s == VertexSet{0, 1, 2, 3});
    CHECK(r_bar == VertexSet{0, 1, 2, 3});
  }
  const Graph triangle = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  {
    const auto [s, r_bar] = pruned_set(identity_perm(3), triangle, triangle);
    CHECK(s.empty());
    CHECK(r_bar.empty());
  }
  {
    const Graph g1 = make_graph(3, {{0, 1}, {1, 2}});
    const Graph g2 = make_graph(3, {{0, 1}});
    const auto [s, r_bar] = pruned_set(identity_perm(3), g1, g2);
    CHECK(r_bar == VertexSet{2});
    CHECK(s == VertexSet{2});
  }
}

TEST_CASE("pruned set containments on random instances") {
  const ModelParams params(300, 9, 1, 0.32);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CorrelatedPair pair = generate_subsampling(params, seed);
    const MapContext ctx = build_map_context(pair);
    CHECK(std::includes(ctx.r_star.begin(), ctx.r_star.end(),
                        ctx.s_star.begin(), ctx.s_star.end()));
    CHECK(std::includes(ctx.r_bar.begin(), ctx.r_bar.end(),
                        ctx.r_star.begin(), ctx.r_star.end()));
    std::vector<char> in_rbar(params.n, 0);
    for (int v : ctx.r_bar) in_rbar[v] = 1;
    for (int i : ctx.s_star) {
      for (int j : pair.g1.neighbors(i)) CHECK_FALSE(in_rbar[j]);
    }
  }
}

TEST_CASE("maj_values") {
  const Graph lonely(3);
  CHECK(maj_values(lonely, {1, -1, 1}) == std::vector<int>{0, 0, 0});

  const Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(maj_values(star, {1, 1, 1, -1})[0] == 1);

  // double-counting identity: sum_i sigma(i) maj(i) = 2 (intra - inter)
  const ModelParams params(200, 8, 2, 0.5);
  const CorrelatedPair pair = generate_subsampling(params, 4);
  const std::vector<int> maj = maj_values(pair.g1, pair.sigma_star);
  long long lhs = 0;
  for (int i = 0; i < 200; ++i) lhs += pair.sigma_star[i] * maj[i];
  long long intra = 0, inter = 0;
  for (int v = 0; v < 200; ++v) {
    for (int u : pair.g1.neighbors(v)) {
      if (u > v) {
        (pair.sigma_star[v] == pair.sigma_star[u] ? intra : inter) += 1;
      }
    }
  }
  CHECK(lhs == 2 * (intra - inter));
}

TEST_CASE("map_estimate rank and tie rules") {
  MapContext ctx;
  ctx.sigma_star = {1, -1, 1, -1};
  ctx.s_star = {0, 1};
  ctx.maj = {3, -2, 0, 0};

  // S empty: genie everywhere
  MapContext genie = ctx;
  genie.s_star = {};
  CHECK(map_estimate(genie, 9, 1) == ctx.sigma_star);

  // one + and one -: larger maj gets +1 when alpha > beta
  Labeling est = map_estimate(ctx, 9, 1);
  CHECK(est[0] == 1);
  CHECK(est[1] == -1);

  // reversed direction: smallest maj gets +1
  est = map_estimate(ctx, 1, 9);
  CHECK(est[0] == -1);
  CHECK(est[1] == 1);

  // tie: smaller id gets +1
  ctx.maj = {5, 5, 0, 0};
  est = map_estimate(ctx, 9, 1);
  CHECK(est[0] == 1);
  CHECK(est[1] == -1);

  CHECK_THROWS(map_estimate(ctx, 3, 3));
}

TEST_CASE("map_estimate preserves community sizes within S") {
  const ModelParams params(300, 9, 1, 0.32);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CorrelatedPair pair = generate_subsampling(params, seed);
    const MapContext ctx = build_map_context(pair);
    const Labeling est = map_estimate(ctx, 9, 1);
    int want = 0, got = 0;
    for (int i : ctx.s_star) {
      want += ctx.sigma_star[i] == 1;
      got += est[i] == 1;
    }
    CHECK(want == got);
    for (int i = 0; i < params.n; ++i) {
      if (!std::binary_search(ctx.s_star.begin(), ctx.s_star.end(), i)) {
        CHECK(est[i] == pair.sigma_star[i]);
      }
    }
  }
}

TEST_CASE("map_failure_witness") {
  MapContext ctx;
  ctx.sigma_star = {1, -1, 1, -1};
  ctx.maj = {-1, 1, 0, 0};

  ctx.s_star = {};
  CHECK_FALSE(map_failure_witness(ctx, 9, 1).has_value());

  ctx.s_star = {0, 1};
  const auto w = map_failure_witness(ctx, 9, 1);
  REQUIRE(w.has_value());
  CHECK(w->first == 0);
  CHECK(w->second == 1);
  CHECK_FALSE(map_failure_witness(ctx, 1, 9).has_value());
  CHECK_THROWS(map_failure_witness(ctx, 2, 2));
}

TEST_CASE("witness implies imperfect map estimate") {
  // seed 191 is a known witness instance at this Pink-region point
  const ModelParams params(1000, 9, 1, 0.32);
  int witnesses = 0;
  for (std::uint64_t seed : {4ULL, 77ULL, 150ULL, 191ULL}) {
    const CorrelatedPair pair = generate_subsampling(params, seed);
    const MapContext ctx = build_map_context(pair);
    const auto w = map_failure_witness(ctx, 9, 1);
    const auto [w_plus, w_minus] = witness_counts(ctx);
    if (w_plus > 0 && w_minus > 0) CHECK(w.has_value());
    if (w.has_value()) {
      ++witnesses;
      CHECK(overlap(map_estimate(ctx, 9, 1), pair.sigma_star) < 1.0);
    }
  }
  CHECK(witnesses >= 1);  // Pink-region point: failures must show up
}

TEST_CASE("witness_counts") {
  MapContext ctx;
  ctx.sigma_star = {1, -1, 1, -1};
  ctx.maj = {-2, 3, 1, -1};
  ctx.s_star = {};
  CHECK(witness_counts(ctx) == std::make_pair(0LL, 0LL));
  ctx.s_star = {0, 1, 2, 3};
  CHECK(witness_counts(ctx) == std::make_pair(1LL, 1LL));
}
