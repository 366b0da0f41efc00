#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "csbm/graph.hpp"
#include "csbm/model.hpp"

namespace csbm {

// Vertices with no surviving edge in G1 ∧_pi G2.
VertexSet singleton_set(const std::vector<int>& pi, const Graph& g1,
                        const Graph& g2);

// (S_pi, R̄_pi): R̄ extends the singleton set R by the pi-preimages of the
// G2-neighborhood of pi(R); S keeps the singletons with no G1-neighbor in R̄.
std::pair<VertexSet, VertexSet> pruned_set(const std::vector<int>& pi,
                                           const Graph& g1, const Graph& g2);

// maj(i) = sum of sigma_star over the G1-neighbors of i, for every vertex.
std::vector<int> maj_values(const Graph& g1, const Labeling& sigma_star);

struct MapContext {
  VertexSet r_star;       // singletons of G1 ∧_{pi*} G2
  VertexSet r_bar;        // expanded singleton set
  VertexSet s_star;       // pruned singletons, S ⊆ R ⊆ R̄
  std::vector<int> maj;   // per-vertex neighbor-label sums in G1
  Labeling sigma_star;    // genie labels
};

MapContext build_map_context(const CorrelatedPair& pair);

// Genie labels outside S; inside S the |S ∩ V+| largest maj values get +1
// when alpha > beta (smallest when alpha < beta), ties to the smaller id.
// Throws for alpha == beta.
Labeling map_estimate(const MapContext& ctx, double alpha, double beta);

// Lexicographically smallest (i, j) with i ∈ S ∩ V+, j ∈ S ∩ V- and
// maj(i) < maj(j) when alpha > beta (reversed when alpha < beta).
std::optional<std::pair<int, int>> map_failure_witness(const MapContext& ctx,
                                                       double alpha,
                                                       double beta);

// (W+, W-): singletons of S in V+ with negative maj, and in V- with
// positive maj.
std::pair<long long, long long> witness_counts(const MapContext& ctx);

}  // namespace csbm
