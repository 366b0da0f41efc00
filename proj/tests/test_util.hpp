#pragma once

#include <utility>
#include <vector>

#include "csbm/graph.hpp"
#include "csbm/rng.hpp"

namespace csbm::test {

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph::from_edges(n, edges);
}

// Erdos-Renyi-ish random graph for property tests; density per mille.
inline Graph random_graph(int n, int per_mille, std::uint64_t seed) {
  rng::Stream stream(seed, 0xfeedULL);
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (stream.next_below(1000) < static_cast<std::uint64_t>(per_mille)) {
        g.push_edge_unchecked(i, j);
      }
    }
  }
  g.finalize();
  return g;
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i;
  rng::Stream stream(seed, 0xbeefULL);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(stream.next_below(i + 1));
    std::swap(pi[i], pi[j]);
  }
  return pi;
}

}  // namespace csbm::test
