#pragma once

#include "csbm/graph.hpp"

namespace csbm {

// Greedy closure of u: repeatedly absorb the smallest-id outside vertex with
// at least two neighbors inside, until every outside vertex has at most one.
VertexSet luczak_expand(const Graph& g, const VertexSet& u);

}  // namespace csbm
