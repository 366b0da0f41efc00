#pragma once

#include <iosfwd>

#include "csbm/graph.hpp"
#include "csbm/model.hpp"

namespace csbm {

// True iff every member of M has degree >= k in the intersection graph.
// The empty matching qualifies vacuously.
bool is_kcore_matching(const Matching& m, const Graph& g1, const Graph& g2,
                       int k);

// Maximum-cardinality k-core matching by exhaustive enumeration over
// injective partial maps; ties broken by lexicographically smallest (M, mu).
// Factorial cost: rejected above enumeration_bound vertices.
Matching kcore_matching_exact(const Graph& g1, const Graph& g2, int k,
                              int enumeration_bound = 8);

// The peeled form: M* = k_core(G1 /\_{pi*} G2, k) with mu = pi*{M*}.
// This is the whp value of the enumeration matcher and the pipeline default.
Matching kcore_matching_oracle(const CorrelatedPair& pair, int k);

// Sum over mismatched members (mu(i) != pi*(i)) of their degree in the
// intersection graph.
long long f_statistic(const Matching& m, const Graph& g1, const Graph& g2,
                      const std::vector<int>& pi_star);

// Adds (i, pi*(i)) for every unmatched i whose image is free; the result is
// pi*-maximal.
Matching maximal_extension(const Matching& m, const std::vector<int>& pi_star);

// Serialization: lines "i mu(i)" sorted by i.
void write_matching(std::ostream& out, const Matching& m);
Matching read_matching(std::istream& in, int n);

}  // namespace csbm
