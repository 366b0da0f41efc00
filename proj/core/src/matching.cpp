#include "csbm/matching.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace csbm {

bool is_kcore_matching(const Matching& m, const Graph& g1, const Graph& g2,
                       int k) {
  const VertexSet members = m.members();
  for (int i : members) {
    int deg = 0;
    for (int j : g1.neighbors(i)) {
      if (m.contains(j) && g2.has_edge(m.image_of(i), m.image_of(j))) ++deg;
    }
    if (deg < k) return false;
  }
  return true;
}

namespace {

// Depth-first assignment of images (ascending) to the members of `m_set`
// (ascending); returns the lexicographically first full map that satisfies
// the k-core condition.
bool assign_images(const Graph& g1, const Graph& g2, int k,
                   const VertexSet& m_set, const VertexSet& image_pool,
                   std::size_t depth, std::vector<int>& image,
                   std::vector<char>& used) {
  if (depth == m_set.size()) {
    // Min intersection degree within the candidate matching.
    for (std::size_t a = 0; a < m_set.size(); ++a) {
      int deg = 0;
      for (std::size_t b = 0; b < m_set.size(); ++b) {
        if (a == b) continue;
        if (g1.has_edge(m_set[a], m_set[b]) &&
            g2.has_edge(image[a], image[b])) {
          ++deg;
        }
      }
      if (deg < k) return false;
    }
    return true;
  }
  for (std::size_t t = 0; t < image_pool.size(); ++t) {
    if (used[t]) continue;
    used[t] = 1;
    image[depth] = image_pool[t];
    if (assign_images(g1, g2, k, m_set, image_pool, depth + 1, image, used)) {
      return true;
    }
    used[t] = 0;
  }
  return false;
}

bool min_degree_within(const Graph& g, const VertexSet& s, int k) {
  for (int v : s) {
    int deg = 0;
    for (int u : s) {
      if (u != v && g.has_edge(v, u)) ++deg;
    }
    if (deg < k) return false;
  }
  return true;
}

}  // namespace

Matching kcore_matching_exact(const Graph& g1, const Graph& g2, int k,
                              int enumeration_bound) {
  const int n = g1.size();
  if (g2.size() != n) throw std::invalid_argument("kcore_matching_exact: size mismatch");
  if (n > enumeration_bound) {
    throw std::invalid_argument("kcore_matching_exact: n exceeds enumeration bound");
  }
  if (k < 1) throw std::invalid_argument("kcore_matching_exact: k must be >= 1");

  // A member needs k intersection-neighbors, hence degree >= k in each graph.
  VertexSet pool1, pool2;
  for (int v = 0; v < n; ++v) {
    if (g1.degree(v) >= k) pool1.push_back(v);
    if (g2.degree(v) >= k) pool2.push_back(v);
  }

  const int max_size = static_cast<int>(std::min(pool1.size(), pool2.size()));
  for (int mm = max_size; mm >= k + 1; --mm) {
    // Subsets of pool1 of size mm in lexicographic order.
    std::vector<int> idx(mm);
    for (int t = 0; t < mm; ++t) idx[t] = t;
    for (;;) {
      VertexSet m_set(mm);
      for (int t = 0; t < mm; ++t) m_set[t] = pool1[idx[t]];
      if (min_degree_within(g1, m_set, k)) {
        std::vector<int> image(mm);
        std::vector<char> used(pool2.size(), 0);
        if (assign_images(g1, g2, k, m_set, pool2, 0, image, used)) {
          Matching out(n);
          for (int t = 0; t < mm; ++t) out.insert(m_set[t], image[t]);
          return out;
        }
      }
      // next combination
      int t = mm - 1;
      while (t >= 0 && idx[t] == static_cast<int>(pool1.size()) - mm + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int u = t + 1; u < mm; ++u) idx[u] = idx[u - 1] + 1;
    }
  }
  return Matching(n);  // only the empty matching qualifies
}

Matching kcore_matching_oracle(const CorrelatedPair& pair, int k) {
  const Matching truth = Matching::from_permutation(pair.pi_star);
  const Graph inter = intersection_graph(pair.g1, pair.g2, truth);
  const VertexSet core = k_core(inter, k);
  return Matching::restriction(pair.pi_star, core);
}

long long f_statistic(const Matching& m, const Graph& g1, const Graph& g2,
                      const std::vector<int>& pi_star) {
  long long total = 0;
  for (int i : m.members()) {
    if (m.image_of(i) == pi_star[i]) continue;
    for (int j : g1.neighbors(i)) {
      if (m.contains(j) && g2.has_edge(m.image_of(i), m.image_of(j))) ++total;
    }
  }
  return total;
}

Matching maximal_extension(const Matching& m, const std::vector<int>& pi_star) {
  const int n = m.domain_size();
  if (static_cast<int>(pi_star.size()) != n) {
    throw std::invalid_argument("maximal_extension: permutation size mismatch");
  }
  Matching out(n);
  for (int i = 0; i < n; ++i) {
    if (m.contains(i)) out.insert(i, m.image_of(i));
  }
  for (int i = 0; i < n; ++i) {
    if (!out.contains(i) && !out.image_used(pi_star[i])) {
      out.insert(i, pi_star[i]);
    }
  }
  return out;
}

void write_matching(std::ostream& out, const Matching& m) {
  for (int i : m.members()) out << i << " " << m.image_of(i) << "\n";
}

Matching read_matching(std::istream& in, int n) {
  Matching m(n);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    int i, j;
    if (!(ls >> i >> j)) throw std::runtime_error("matching: malformed line: " + line);
    m.insert(i, j);
  }
  return m;
}

}  // namespace csbm
